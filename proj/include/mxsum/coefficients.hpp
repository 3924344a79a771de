#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>
#include <vector>

#include "mxsum/bigfloat.hpp"
#include "mxsum/errors.hpp"
#include "mxsum/power_series.hpp"
#include "mxsum/upolynomial.hpp"

namespace mxsum {

enum class CoefficientKind { A, B, Bhat };

inline std::string_view to_string(CoefficientKind k) {
  switch (k) {
    case CoefficientKind::A: return "A";
    case CoefficientKind::B: return "B";
    case CoefficientKind::Bhat: return "Bhat";
  }
  return "?";
}

/// Numeric coefficient values k = 0..K at one lambda.
struct CoefficientTable {
  CoefficientKind kind = CoefficientKind::B;
  double lambda = 0.0;
  int K = 0;
  std::vector<double> values;
  /// Bhat only: values came from the small-lambda series (the direct form
  /// cancels catastrophically there).
  bool small_lambda_series = false;
};

inline constexpr int max_a_index = 60;
inline constexpr int max_b_index = max_derivative_order / 2;
inline constexpr double bhat_series_threshold = 0.05;

/// Exact form of A_k as a homogeneous polynomial:
/// A_k = sum_i c[i] lambda^{2i} pi^{2(k-i)}, for k = 0..K.
///
/// With w = pi x and rho = (lambda/pi)^2,
///   sin(lambda x)/sinh(pi x) = (lambda/pi) * [sin(sqrt(rho) w)/(sqrt(rho) w)] * [w / sinh w],
/// and the first bracket has coefficients (-1)^i rho^i/(2i+1)!, so only the
/// rational series of w/sinh w is needed.
inline std::vector<std::vector<mpq_class>> a_coefficients_exact(int K) {
  if (K < 0 || K > max_a_index) throw precondition_error("a_coefficients: K must be in [0, 60]");
  const auto n = static_cast<std::size_t>(K) + 1;
  const PowerSeries w_over_sinh = reciprocal(series::sinhc(n));
  std::vector<std::vector<mpq_class>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out[k].resize(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      mpq_class c = w_over_sinh[k - i] / mpq_class(factorial(2 * i + 1));
      if ((k + i) % 2 == 1) c = -c;
      out[k][i] = c;
    }
  }
  return out;
}

inline CoefficientTable a_coefficients(double lambda, int K) {
  if (!(lambda > 0.0)) throw precondition_error("a_coefficients: lambda must be positive");
  const auto exact = a_coefficients_exact(K);
  CoefficientTable t{CoefficientKind::A, lambda, K, {}, false};
  for (int k = 0; k <= K; ++k) {
    const double digits = 40.0 + 2.0 * k * std::log10(std::max(std::numbers::pi, lambda));
    const mpfr_prec_t bits = bits_for_digits(digits);
    const BigFloat pi2 = pow(BigFloat::pi(bits), 2);
    const BigFloat lam2 = pow(BigFloat(bits, lambda), 2);
    BigFloat acc(bits);
    // Horner in lambda^2 / pi^2, then scale by pi^{2k}.
    const BigFloat ratio = lam2 / pi2;
    for (int i = k; i >= 0; --i) {
      acc *= ratio;
      acc += exact[k][i];
    }
    acc *= pow(pi2, k);
    t.values.push_back(acc.to_double());
  }
  return t;
}

namespace detail {

inline double log10_factorial(int n) { return std::lgamma(n + 1.0) / std::numbers::ln10; }

}  // namespace detail

/// B_k = (-1)^k 2^{-2k-1} (d/dx)^{2k} tanh x at x = lambda/2, k = 0..K.
inline CoefficientTable b_coefficients(double lambda, int K) {
  if (!(lambda > 0.0)) throw precondition_error("b_coefficients: lambda must be positive");
  if (K < 0 || K > max_b_index) throw precondition_error("b_coefficients: K must be in [0, 100]");
  DerivativePolyCache cache(UKind::tanh);
  const double x = 0.5 * lambda;
  CoefficientTable t{CoefficientKind::B, lambda, K, {}, false};
  for (int k = 0; k <= K; ++k) {
    const UPolynomial& p = cache.get(2 * k);
    const double u = std::tanh(x);
    const double bound = log10_magnitude_bound(p, u);
    const double estimate = detail::log10_factorial(2 * k) - (2 * k + 1) * std::log10(std::numbers::pi) +
                            (2 * k + 1) * std::log10(2.0) + std::log10(std::min(x, 1.0)) - 20.0;
    const mpfr_prec_t bits = bits_for_digits(40.0 + std::max(0.0, bound - estimate));
    BigFloat value = evaluate(p, tanh(BigFloat(bits, x)));
    value.mul_2si(-(2 * k + 1));
    if (k % 2 == 1) value.neg();
    t.values.push_back(value.to_double());
  }
  return t;
}

namespace detail {

/// 2^{-2k-1} (d/dx)^{2k} (coth x - 1/x) from the Taylor series
/// coth x - 1/x = sum_{j>=1} d_j x^{2j-1}, d_j the x^{2j} coefficient of x coth x.
/// Converges for x < pi; used where the direct form cancels.
inline std::vector<double> bhat_series(double x, int K) {
  constexpr int extra_terms = 60;
  const std::size_t n = static_cast<std::size_t>(K) + 2 + extra_terms;
  const PowerSeries xc = series::x_coth(n);
  const mpfr_prec_t bits = bits_for_digits(50.0);
  const BigFloat bx(bits, x);
  std::vector<double> out;
  for (int k = 0; k <= K; ++k) {
    BigFloat sum(bits);
    BigFloat xp(bits, 1.0);  // x^{2j-1-2k}, starting at j = k+1 -> x^1
    xp *= bx;
    const BigFloat x2 = bx * bx;
    for (std::size_t j = static_cast<std::size_t>(k) + 1; j < n; ++j) {
      // (2j-1)! / (2j-1-2k)!
      mpz_class falling = 1;
      for (std::size_t m = 2 * j - 2 * static_cast<std::size_t>(k); m <= 2 * j - 1; ++m) falling *= static_cast<unsigned long>(m);
      BigFloat term(bits, mpq_class(xc[j] * falling));
      term *= xp;
      sum += term;
      xp *= x2;
      if (std::abs(term.to_double()) <= 1e-40 * std::abs(sum.to_double()) && j > static_cast<std::size_t>(k) + 3) break;
    }
    sum.mul_2si(-(2 * k + 1));
    out.push_back(sum.to_double());
  }
  return out;
}

}  // namespace detail

/// Bhat_k = 2^{-2k-1} [ (d/dx)^{2k} coth x - (2k)!/x^{2k+1} ] at x = lambda/2.
inline CoefficientTable bhat_coefficients(double lambda, int K) {
  if (!(lambda > 0.0)) throw precondition_error("bhat_coefficients: lambda must be positive");
  if (K < 0 || K > max_b_index) throw precondition_error("bhat_coefficients: K must be in [0, 100]");
  const double x = 0.5 * lambda;
  CoefficientTable t{CoefficientKind::Bhat, lambda, K, {}, false};
  if (lambda < bhat_series_threshold) {
    t.values = detail::bhat_series(x, K);
    t.small_lambda_series = true;
    return t;
  }
  DerivativePolyCache cache(UKind::coth);
  for (int k = 0; k <= K; ++k) {
    const UPolynomial& p = cache.get(2 * k);
    const double u = 1.0 / std::tanh(x);
    const double singular = detail::log10_factorial(2 * k) - (2 * k + 1) * std::log10(x);
    const double bound = std::max(log10_magnitude_bound(p, u), singular);
    const double estimate = detail::log10_factorial(2 * k) - (2 * k + 1) * std::log10(std::hypot(std::numbers::pi, x)) +
                            std::log10(std::min(x, 1.0)) - 20.0;
    const mpfr_prec_t bits = bits_for_digits(40.0 + std::max(0.0, bound - estimate));
    const BigFloat bx(bits, x);
    BigFloat value = evaluate(p, coth(bx));
    BigFloat sing(bits, factorial(2 * static_cast<unsigned long>(k)));
    sing /= pow(bx, 2 * k + 1);
    value -= sing;
    value.mul_2si(-(2 * k + 1));
    t.values.push_back(value.to_double());
  }
  return t;
}

inline CoefficientTable coefficients(CoefficientKind kind, double lambda, int K) {
  switch (kind) {
    case CoefficientKind::A: return a_coefficients(lambda, K);
    case CoefficientKind::B: return b_coefficients(lambda, K);
    case CoefficientKind::Bhat: return bhat_coefficients(lambda, K);
  }
  throw precondition_error("coefficients: unknown kind");
}

}  // namespace mxsum
