#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mxsum/branch_integrals.hpp"
#include "mxsum/coefficients.hpp"
#include "mxsum/errors.hpp"
#include "mxsum/params.hpp"
#include "mxsum/special.hpp"
#include "mxsum/summation.hpp"

// Large-a algebraic expansions in inverse powers of a^2.

namespace mxsum {

namespace detail {

/// a^{-2mu} sum_{k<=K} s^k (mu)_k c_k / (k! a^{2k}) with s = +-1; records the
/// first omitted term and the first k whose term grows.
inline Evaluation inverse_power_series(const SeriesParams& p, int K, const CoefficientTable& c, double s) {
  const complex a = p.a;
  const double mu = p.mu;
  const complex lead = std::pow(a, -2.0 * mu);
  const complex inv_a2 = 1.0 / (a * a);
  Evaluation e;
  KahanAccumulator<complex> acc;
  complex factor{1.0, 0.0};  // s^k (mu)_k / (k! a^{2k})
  double prev = -1.0;
  for (int k = 0; k <= K + 1; ++k) {
    if (k > 0) factor *= s * (mu + k - 1.0) / static_cast<double>(k) * inv_a2;
    const complex term = lead * factor * c.values[k];
    const double mag = std::abs(term);
    if (e.first_increasing_term < 0 && prev > 0.0 && mag > prev) e.first_increasing_term = k;
    if (mag > 0.0) prev = mag;
    if (k <= K) {
      acc += term;
    } else {
      e.error_estimate = mag;
    }
  }
  e.value = acc.value();
  e.truncation_index = K;
  return e;
}

inline void check_algebraic(const SeriesParams& p, int K, const char* who) {
  p.validate();
  if (!(p.lambda > 0.0)) throw precondition_error(std::string(who) + ": requires lambda > 0");
  if (K < 0 || K + 1 > max_b_index) throw precondition_error(std::string(who) + ": K must be in [0, 99]");
}

inline complex half_leading(const SeriesParams& p) { return 0.5 * std::pow(p.a, -2.0 * p.mu); }

}  // namespace detail

/// 1/(2a^{2mu}) + a^{-2mu} sum_{k<=K} (mu)_k B_k / (k! a^{2k}).
inline Evaluation algebraic_minus(const SeriesParams& p, int K) {
  detail::check_algebraic(p, K, "algebraic_minus");
  const CoefficientTable B = b_coefficients(p.lambda, K + 1);
  Evaluation e = detail::inverse_power_series(p, K, B, 1.0);
  e.value += detail::half_leading(p);
  if (p.real_a()) e.value = complex(e.value.real(), 0.0);
  e.method = Method::algebraic;
  e.notes = "truncated asymptotic series";
  return e;
}

/// 1/(2a^{2mu}) + J-expansion to K + a^{-2mu} sum_{k<=K} (-1)^k (mu)_k Bhat_k / (k! a^{2k}).
inline Evaluation algebraic_plus(const SeriesParams& p, int K) {
  detail::check_algebraic(p, K, "algebraic_plus");
  const CoefficientTable Bh = bhat_coefficients(p.lambda, K + 1);
  Evaluation h = detail::inverse_power_series(p, K, Bh, -1.0);
  const Evaluation j = j_mu_asymptotic(p, K);
  Evaluation e;
  e.value = detail::half_leading(p) + j.value + h.value;
  if (p.real_a()) e.value = complex(e.value.real(), 0.0);
  e.method = Method::algebraic;
  e.truncation_index = K;
  e.error_estimate = h.error_estimate + j.error_estimate;
  if (h.first_increasing_term >= 0 && j.first_increasing_term >= 0) {
    e.first_increasing_term = std::min(h.first_increasing_term, j.first_increasing_term);
  } else {
    e.first_increasing_term = std::max(h.first_increasing_term, j.first_increasing_term);
  }
  e.notes = "truncated asymptotic series (common index for both parts)";
  return e;
}

}  // namespace mxsum
