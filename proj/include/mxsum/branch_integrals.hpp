#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "mxsum/coefficients.hpp"
#include "mxsum/errors.hpp"
#include "mxsum/params.hpp"
#include "mxsum/quadrature.hpp"
#include "mxsum/special.hpp"
#include "mxsum/summation.hpp"

// Contributions from the integration path between the branch points +-ia:
//   H^-(a) = a^{1-2mu} int_0^1 sin(lambda a t)/sinh(pi a t) (1-t^2)^{-mu} dt
//   H^+(a) = the same with an extra factor e^{-pi a t}
// and the half-line integral J(a) = int_0^inf e^{-lambda t} (t^2+a^2)^{-mu} dt.

namespace mxsum {

namespace detail {

/// e^{-shift z} sin(w) / sinh(z) for Re z >= 0, without overflow for large |z|.
inline complex damped_sin_over_sinh(complex w, complex z, double shift) {
  if (std::abs(z) <= 1.0) return std::exp(-shift * z) * std::sin(w) / std::sinh(z);
  const complex i{0.0, 1.0};
  const complex e2 = std::exp(-2.0 * z);
  const complex up = std::exp(i * w - (1.0 + shift) * z);
  const complex down = std::exp(-i * w - (1.0 + shift) * z);
  return (up - down) / (i * (1.0 - e2));
}

inline void check_h_preconditions(const SeriesParams& p, const char* who) {
  p.validate();
  if (!(p.mu < 1.0)) throw precondition_error(std::string(who) + ": requires mu < 1 (integrable endpoint)");
}

/// shift = 0 gives H^-, shift = 1 gives H^+.
inline Evaluation h_quadrature(const SeriesParams& p, double tol, double shift) {
  Evaluation e;
  e.method = Method::h_quadrature;
  if (p.lambda == 0.0) {
    e.value = 0.0;
    e.notes = "integrand vanishes identically at lambda = 0";
    return e;
  }
  const complex a = p.a;
  const double mu = p.mu;
  const double lambda = p.lambda;
  // v = 1 - t so the (1-t^2)^{-mu} singularity sits at the lower limit.
  auto integrand = [&](double, double v) -> complex {
    const double t = 1.0 - v;
    const double weight = std::pow(v * (2.0 - v), -mu);
    if (t == 0.0) return weight * (lambda / std::numbers::pi);
    return weight * damped_sin_over_sinh(lambda * a * t, std::numbers::pi * a * t, shift);
  };
  const auto r = integrate(integrand, QuadratureSpec{0.0, 1.0, mu, tol, 12});
  const complex pref = std::pow(a, 1.0 - 2.0 * mu);
  e.value = pref * r.value;
  if (p.real_a()) e.value = complex(e.value.real(), 0.0);
  e.error_estimate = std::abs(pref) * r.error_estimate;
  e.truncation_index = r.terms_used;
  e.notes = "tanh-sinh quadrature";
  return e;
}

}  // namespace detail

inline Evaluation h_minus_quadrature(const SeriesParams& p, double tol = 1e-14) {
  detail::check_h_preconditions(p, "h_minus_quadrature");
  return detail::h_quadrature(p, tol, 0.0);
}

inline Evaluation h_plus_quadrature(const SeriesParams& p, double tol = 1e-14) {
  detail::check_h_preconditions(p, "h_plus_quadrature");
  return detail::h_quadrature(p, tol, 1.0);
}

inline constexpr int small_a_default_terms = 40;

/// Convergent small-a series for H^-:
///   (lambda a^{1-2mu} / 2pi) Gamma(1-mu) sum_k (-1)^k A_k Gamma(k+1/2)/Gamma(k+3/2-mu) a^{2k}.
///
/// The series has radius |a| = 1. For real a <= 1 the terms are (-1)^k times
/// a moment sequence and are summed with CVZ acceleration; complex a is
/// summed directly and must satisfy |a| <= 0.6.
inline Evaluation small_a_minus(const SeriesParams& p, int K = small_a_default_terms) {
  detail::check_h_preconditions(p, "small_a_minus");
  if (K < 8 || K > max_a_index) throw precondition_error("small_a_minus: K must be in [8, 60]");
  Evaluation e;
  e.method = Method::small_a;
  if (p.lambda == 0.0) {
    e.value = 0.0;
    e.notes = "prefactor lambda vanishes";
    return e;
  }
  const complex a = p.a;
  const double mu = p.mu;
  const bool real_path = p.real_a() && a.real() <= 1.0;
  if (!real_path && std::abs(a) > 0.6) {
    throw convergence_error("small_a_minus: |a| outside the range where the series converges usefully (term ratio >= 1)");
  }

  const CoefficientTable A = a_coefficients(p.lambda, K);
  const complex a2 = a * a;
  std::vector<complex> terms;
  double ratio = gamma_real(0.5) / gamma_real(1.5 - mu);
  complex apow{1.0, 0.0};
  for (int k = 0; k <= K; ++k) {
    terms.push_back((k % 2 == 0 ? 1.0 : -1.0) * A.values[k] * ratio * apow);
    ratio *= (k + 0.5) / (k + 1.5 - mu);
    apow *= a2;
  }
  const complex pref = p.lambda * std::pow(a, 1.0 - 2.0 * mu) * gamma_real(1.0 - mu) / (2.0 * std::numbers::pi);

  complex sum;
  if (real_path) {
    const std::span<const complex> all(terms);
    sum = detail::cvz_sum(all);
    const complex shorter = detail::cvz_sum(all.first(all.size() - all.size() / 4));
    e.error_estimate = std::abs(pref) * std::abs(sum - shorter);
    e.truncation_index = K;
    e.notes = "CVZ-accelerated";
  } else {
    KahanAccumulator<complex> acc;
    int small = 0;
    int k = 0;
    for (; k <= K; ++k) {
      acc += terms[k];
      if (std::abs(terms[k]) <= 1e-17 * std::abs(acc.value())) {
        if (++small >= 2) break;
      } else {
        small = 0;
      }
    }
    if (k > K) throw convergence_error("small_a_minus: series did not converge within K terms");
    sum = acc.value();
    e.error_estimate = std::abs(pref) * std::abs(terms[k]);
    e.truncation_index = k;
    e.notes = "direct summation";
  }
  e.value = pref * sum;
  if (p.real_a()) e.value = complex(e.value.real(), 0.0);
  return e;
}

/// J(a) = int_0^inf e^{-lambda t} (t^2 + a^2)^{-mu} dt by exp-sinh quadrature.
inline Evaluation j_mu_quadrature(const SeriesParams& p, double tol = 1e-14) {
  p.validate();
  if (!(p.lambda > 0.0)) throw precondition_error("j_mu_quadrature: requires lambda > 0");
  const complex a2 = p.a * p.a;
  const double mu = p.mu;
  const double lambda = p.lambda;
  auto integrand = [&](double t) -> complex {
    const double decay = std::exp(-lambda * t);
    if (decay == 0.0) return 0.0;
    return decay * std::pow(complex(t * t) + a2, -mu);
  };
  const auto r = integrate(integrand,
                           QuadratureSpec{0.0, std::numeric_limits<double>::infinity(), 0.0, tol, 12});
  Evaluation e;
  e.method = Method::j_quadrature;
  e.value = p.real_a() ? complex(r.value.real(), 0.0) : r.value;
  e.error_estimate = r.error_estimate;
  e.truncation_index = r.terms_used;
  e.notes = "exp-sinh quadrature";
  return e;
}

/// Large-|a| expansion (a^{1-2mu}/2) sum_k (-1)^k (1/2)_k (mu)_k / (lambda a/2)^{2k+1}, k = 0..K.
inline Evaluation j_mu_asymptotic(const SeriesParams& p, int K) {
  p.validate();
  if (!(p.lambda > 0.0)) throw precondition_error("j_mu_asymptotic: requires lambda > 0");
  if (K < 0) throw precondition_error("j_mu_asymptotic: K must be >= 0");
  const complex a = p.a;
  const double mu = p.mu;
  const complex z = 0.5 * p.lambda * a;
  const complex z2inv = 1.0 / (z * z);
  const complex pref = 0.5 * std::pow(a, 1.0 - 2.0 * mu);

  Evaluation e;
  e.method = Method::j_asymptotic;
  KahanAccumulator<complex> acc;
  complex term = 1.0 / z;
  double prev = std::abs(term);
  for (int k = 0; k <= K + 1; ++k) {
    if (k > 0) {
      term *= -(k - 0.5) * (mu + k - 1.0) * z2inv;
      const double mag = std::abs(term);
      if (e.first_increasing_term < 0 && mag > prev && mag != 0.0) e.first_increasing_term = k;
      prev = mag;
    }
    if (k <= K) {
      acc += term;
    } else {
      e.error_estimate = std::abs(pref * term);
    }
  }
  e.value = pref * acc.value();
  if (p.real_a()) e.value = complex(e.value.real(), 0.0);
  e.truncation_index = K;
  if (e.first_increasing_term >= 0 && e.first_increasing_term <= K) e.notes = "terms grow before K";
  return e;
}

}  // namespace mxsum
