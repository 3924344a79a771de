#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "mxsum/bessel_k.hpp"
#include "mxsum/bessel_tail.hpp"
#include "mxsum/branch_integrals.hpp"
#include "mxsum/direct_sum.hpp"
#include "mxsum/errors.hpp"
#include "mxsum/hypergeometric.hpp"
#include "mxsum/params.hpp"
#include "mxsum/special.hpp"
#include "mxsum/summation.hpp"

// Exact representations and closed forms of S_mu^{+-}(a; lambda).

namespace mxsum {

inline constexpr double full_quadrature_tol = 1e-15;

/// 1/(2a^{2mu}) + H^-(a) + T^-(a), exact for 0 < mu < 1 and lambda >= 0.
inline Evaluation full_minus(const SeriesParams& p) {
  p.validate();
  if (!(p.mu > 0.0 && p.mu < 1.0)) throw precondition_error("full_minus: requires 0 < mu < 1");
  const TailResult tail = bessel_tail_minus(p);
  const Evaluation h = h_minus_quadrature(p, full_quadrature_tol);
  Evaluation e;
  e.method = Method::full;
  e.value = 0.5 * std::pow(p.a, -2.0 * p.mu) + h.value + tail.evaluation.value;
  if (p.real_a()) e.value = complex(e.value.real(), 0.0);
  e.error_estimate = h.error_estimate + tail.evaluation.error_estimate;
  e.truncation_index = h.truncation_index;
  e.tail_terms_used = tail.evaluation.tail_terms_used;
  e.notes = "leading term + branch integral + Bessel tail";
  return e;
}

/// 1/(2a^{2mu}) + J(a) + H^+(a) + T^+(a), exact for 0 < mu < 1 and lambda > 0.
inline Evaluation full_plus(const SeriesParams& p) {
  p.validate();
  if (!(p.mu > 0.0 && p.mu < 1.0)) throw precondition_error("full_plus: requires 0 < mu < 1");
  if (!(p.lambda > 0.0)) throw precondition_error("full_plus: requires lambda > 0");
  const TailResult tail = bessel_tail_plus(p);
  const Evaluation h = h_plus_quadrature(p, full_quadrature_tol);
  const Evaluation j = j_mu_quadrature(p, full_quadrature_tol);
  Evaluation e;
  e.method = Method::full;
  e.value = 0.5 * std::pow(p.a, -2.0 * p.mu) + j.value + h.value + tail.evaluation.value;
  if (p.real_a()) e.value = complex(e.value.real(), 0.0);
  e.error_estimate = j.error_estimate + h.error_estimate + tail.evaluation.error_estimate;
  e.truncation_index = h.truncation_index;
  e.tail_terms_used = tail.evaluation.tail_terms_used;
  e.notes = "leading term + half-line integral + branch integral + Bessel tail";
  return e;
}

namespace detail {

/// 2^{3/2-mu} sqrt(pi) / (a^{2mu-1} Gamma(mu)) sum_k K_nu(X_k) / X_k^nu, X_k = (2k+shift) pi a.
inline Evaluation lambda0_tail(double mu, complex a, int n_terms, double shift) {
  const double pi = std::numbers::pi;
  const double nu = 0.5 - mu;
  const complex pref = std::pow(2.0, 1.5 - mu) * std::sqrt(pi) * std::pow(a, 1.0 - 2.0 * mu) / gamma_real(mu);
  KahanAccumulator<complex> acc;
  Evaluation e;
  for (int k = 0; k < n_terms; ++k) {
    const complex X = (2.0 * k + shift) * pi * a;
    const complex term = pref * kv_complex(nu, X) * std::pow(X, -nu);
    acc += term;
    e.error_estimate = std::abs(term);
    e.tail_terms_used = k + 1;
    if (std::abs(term) < tail_relative_cutoff * std::abs(acc.value()) || term == 0.0) break;
  }
  e.value = acc.value();
  return e;
}

inline void check_lambda0(double mu, complex a, int n_terms, const char* who) {
  if (!std::isfinite(mu)) throw precondition_error(std::string(who) + ": mu must be finite");
  if (!(a.real() > 0.0) || !std::isfinite(a.imag())) throw domain_error(std::string(who) + ": requires Re a > 0");
  if (n_terms < 1) throw precondition_error(std::string(who) + ": n_terms must be >= 1");
  if (std::abs(0.5 - mu) > 10.0) throw precondition_error(std::string(who) + ": |mu - 1/2| must not exceed 10");
}

}  // namespace detail

/// Alternating series at lambda = 0 for mu > 0:
/// 1/(2a^{2mu}) + 2^{3/2-mu} sqrt(pi)/(a^{2mu-1} Gamma(mu)) sum_k K_{1/2-mu}(X_k)/X_k^{1/2-mu}, X_k = (2k+1) pi a.
inline Evaluation olver_lambda0_minus(double mu, complex a, int n_terms = tail_default_terms) {
  detail::check_lambda0(mu, a, n_terms, "olver_lambda0_minus");
  if (!(mu > 0.0)) throw precondition_error("olver_lambda0_minus: requires mu > 0");
  Evaluation e = detail::lambda0_tail(mu, a, n_terms, 1.0);
  e.value += 0.5 * std::pow(a, -2.0 * mu);
  if (a.imag() == 0.0) e.value = complex(e.value.real(), 0.0);
  e.method = Method::lambda0;
  e.notes = "lambda = 0 Bessel representation";
  return e;
}

/// Plain series at lambda = 0 for mu > 1/2: as above with
/// sqrt(pi) Gamma(mu-1/2)/(2 a^{2mu-1} Gamma(mu)) added and X_k = (2k+2) pi a.
inline Evaluation lambda0_plus(double mu, complex a, int n_terms = tail_default_terms) {
  detail::check_lambda0(mu, a, n_terms, "lambda0_plus");
  if (!(mu > 0.5)) throw domain_error("lambda0_plus: series diverges for mu <= 1/2");
  Evaluation e = detail::lambda0_tail(mu, a, n_terms, 2.0);
  e.value += 0.5 * std::pow(a, -2.0 * mu) +
             std::sqrt(std::numbers::pi) * gamma_real(mu - 0.5) / (2.0 * gamma_real(mu)) * std::pow(a, 1.0 - 2.0 * mu);
  if (a.imag() == 0.0) e.value = complex(e.value.real(), 0.0);
  e.method = Method::lambda0;
  e.notes = "lambda = 0 Bessel representation";
  return e;
}

inline constexpr int integer_mu_max = 5;

namespace detail {

struct PartialFractionRow {
  std::array<double, 5> c;
  double denominator;
};

/// 1/(k^2+a^2)^n = sum_j c_j [G_j(a) + G_j(-a)] / (den a^{2n}) with G_j(a) = (ia/(ia+k))^j.
inline constexpr std::array<PartialFractionRow, 5> partial_fractions{{
    {{1, 0, 0, 0, 0}, 2},
    {{1, 1, 0, 0, 0}, 4},
    {{3, 3, 2, 0, 0}, 16},
    {{5, 5, 4, 2, 0}, 32},
    {{35, 35, 30, 20, 8}, 256},
}};

/// F_j(b) = sum_k z^k (ib/(ib+k))^j as a (j+1)F(j) series.
inline SeriesSum<complex> f_series(int j, complex b, complex z) {
  const complex ib = complex(0.0, 1.0) * b;
  std::vector<complex> num{complex(1.0, 0.0)};
  std::vector<complex> den;
  for (int r = 0; r < j; ++r) {
    num.push_back(ib);
    den.push_back(ib + 1.0);
  }
  return pfq_series(num, den, z, 1e-17);
}

}  // namespace detail

/// S_n^{+-}(a; lambda) for integer n = 0..5 through hypergeometric series in z = +-e^{-lambda}.
inline Evaluation integer_mu_closed_form(int n, const SeriesParams& p) {
  p.validate();
  if (n < 0 || n > integer_mu_max) throw precondition_error("integer_mu_closed_form: n must be in [0, 5]");
  if (!(p.lambda > 0.0)) throw precondition_error("integer_mu_closed_form: requires lambda > 0");
  Evaluation e;
  e.method = Method::integer_mu;
  const double el = std::exp(p.lambda);
  if (n == 0) {
    e.value = el / (el - sign_factor(p.sign));
    e.notes = "geometric series";
    return e;
  }
  const complex z = sign_factor(p.sign) * std::exp(-p.lambda);
  const auto& row = detail::partial_fractions[static_cast<std::size_t>(n - 1)];
  KahanAccumulator<complex> acc;
  for (int j = 1; j <= n; ++j) {
    const double c = row.c[static_cast<std::size_t>(j - 1)];
    const auto fp = detail::f_series(j, p.a, z);
    const auto fm = detail::f_series(j, -p.a, z);
    acc += c * (fp.value + fm.value);
    e.error_estimate += c * (fp.error_estimate + fm.error_estimate);
    e.truncation_index = std::max({e.truncation_index, fp.terms_used, fm.terms_used});
  }
  const complex scale = 1.0 / (row.denominator * std::pow(p.a, 2.0 * n));
  e.value = acc.value() * scale;
  if (p.real_a()) e.value = complex(e.value.real(), 0.0);
  e.error_estimate *= std::abs(scale);
  e.notes = "partial fractions with hypergeometric series";
  return e;
}

/// Relative discrepancy between -(1/(2 mu a)) dS_mu/da (central difference with
/// step h) and S_{mu+1}, all evaluated by direct summation.
inline double mu_step_check(const SeriesParams& p, double h) {
  p.validate();
  if (!p.real_a()) throw precondition_error("mu_step_check: requires real a");
  if (!(p.mu > 0.0)) throw precondition_error("mu_step_check: requires mu > 0");
  if (!(h > 0.0) || !(h < p.a.real())) throw precondition_error("mu_step_check: requires 0 < h < a");
  constexpr double tol = 1e-17;
  const double a = p.a.real();
  SeriesParams up = p;
  up.a = a + h;
  SeriesParams down = p;
  down.a = a - h;
  SeriesParams next = p;
  next.mu = p.mu + 1.0;
  const double derivative = (direct_sum(up, tol).value.real() - direct_sum(down, tol).value.real()) / (2.0 * h);
  const double stepped = -derivative / (2.0 * p.mu * a);
  const double reference = direct_sum(next, tol).value.real();
  return std::abs(stepped - reference) / std::abs(reference);
}

}  // namespace mxsum
