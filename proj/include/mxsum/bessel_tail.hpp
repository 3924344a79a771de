#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "mxsum/bessel_k.hpp"
#include "mxsum/errors.hpp"
#include "mxsum/params.hpp"
#include "mxsum/special.hpp"
#include "mxsum/summation.hpp"

// Exponentially small K-Bessel sums. With nu = 1/2 - mu and
// X_k = (2k + shift) pi a + i lambda a,
//   I(a) = i e^{-i pi mu} a^{1-2mu} Gamma(1-mu)/sqrt(pi) sum_k (2/X_k)^nu K_nu(X_k)
// and the tail is T(a) = I(a) + conj(I(conj a)), which is 2 Re I(a) for real a.
// shift = 1 for the alternating series, shift = 2 for the plain one.

namespace mxsum {

inline constexpr int tail_default_terms = 60;
inline constexpr double tail_relative_cutoff = 1e-18;

struct TailResult {
  Evaluation evaluation;
  std::vector<TailTerm> terms;
  /// Real a only: the same tail summed in the form
  /// 2^{3/2-mu} sqrt(pi) a^{1-2mu}/Gamma(mu) sum_k sin(pi mu - theta_k)/sin(pi mu) |X_k^{-nu} K_nu(X_k)|.
  /// NaN for complex a.
  double display_value = std::numeric_limits<double>::quiet_NaN();
};

namespace detail {

inline TailTerm make_tail_term(int k, complex X, double nu) {
  TailTerm t;
  t.k = k;
  t.X = X;
  t.kv = kv_complex(nu, X);
  const complex scaled = std::pow(X, -nu) * t.kv;
  t.theta = std::arg(scaled);
  t.magnitude = std::abs(scaled);
  return t;
}

inline TailResult bessel_tail(const SeriesParams& p, int n_terms, double shift, const char* who) {
  p.validate();
  if (!(p.mu > 0.0 && p.mu < 1.0)) {
    throw precondition_error(std::string(who) + ": requires 0 < mu < 1 (representation holds for non-integer mu < 1)");
  }
  if (n_terms < 1) throw precondition_error(std::string(who) + ": n_terms must be >= 1");
  const double pi = std::numbers::pi;
  const complex a = p.a;
  const complex ia{0.0, p.lambda};
  const complex up0 = shift * pi * a + ia * a;
  const complex down0 = shift * pi * a - ia * a;
  if (!(up0.real() > 0.0) || !(down0.real() > 0.0)) {
    throw domain_error(std::string(who) + ": Bessel arguments leave the half-plane Re X > 0 (|arg a| + atan(lambda/pi) too large)");
  }

  const double mu = p.mu;
  const double nu = 0.5 - mu;
  const bool real = p.real_a();
  const complex i{0.0, 1.0};
  const complex amu = std::pow(a, 1.0 - 2.0 * mu);
  const double g = gamma_real(1.0 - mu) / std::sqrt(pi);
  const complex c_up = i * std::exp(-i * pi * mu) * amu * g;
  const complex c_down = -i * std::exp(i * pi * mu) * amu * g;
  const double two_nu = std::pow(2.0, nu);

  TailResult out;
  Evaluation& e = out.evaluation;
  e.method = Method::tail;
  KahanAccumulator<complex> acc;
  KahanAccumulator<double> display;
  double last = 0.0;
  int used = 0;
  for (int k = 0; k < n_terms; ++k) {
    const double m = 2.0 * k + shift;
    const TailTerm up = make_tail_term(k, m * pi * a + ia * a, nu);
    complex term;
    if (real) {
      term = 2.0 * (c_up * two_nu * std::pow(up.X, -nu) * up.kv).real();
      display += std::sin(pi * mu - up.theta) * up.magnitude;
    } else {
      const complex Xd = m * pi * a - ia * a;
      term = c_up * two_nu * std::pow(up.X, -nu) * up.kv + c_down * two_nu * std::pow(Xd, -nu) * kv_complex(nu, Xd);
    }
    out.terms.push_back(up);
    acc += term;
    last = std::abs(term);
    used = k + 1;
    if (last < tail_relative_cutoff * std::abs(acc.value()) || last == 0.0) break;
  }
  e.value = acc.value();
  e.tail_terms_used = used;
  e.truncation_index = used - 1;
  e.error_estimate = last;
  if (real) {
    out.display_value = std::pow(2.0, 1.5 - mu) * std::sqrt(pi) * amu.real() / gamma_real(mu) * display.value() /
                        std::sin(pi * mu);
  }
  return out;
}

}  // namespace detail

/// Tail of the alternating series; arguments (2k+1) pi a + i lambda a.
inline TailResult bessel_tail_minus(const SeriesParams& p, int n_terms = tail_default_terms) {
  return detail::bessel_tail(p, n_terms, 1.0, "bessel_tail_minus");
}

/// Tail of the plain series; arguments (2k+2) pi a + i lambda a.
inline TailResult bessel_tail_plus(const SeriesParams& p, int n_terms = tail_default_terms) {
  return detail::bessel_tail(p, n_terms, 2.0, "bessel_tail_plus");
}

}  // namespace mxsum
