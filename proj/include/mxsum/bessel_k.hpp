#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

#include "mxsum/errors.hpp"
#include "mxsum/summation.hpp"

namespace mxsum {

namespace detail {

inline constexpr double kv_asymptotic_threshold = 20.0;
inline constexpr int kv_max_asymptotic_terms = 30;

struct KvResult {
  complex value;
  double error_estimate;
};

/// Hankel expansion K_nu(z) ~ sqrt(pi/2z) e^{-z} sum_k a_k(nu)/z^k.
/// Returns nothing if the terms start to grow before reaching tol.
inline std::optional<KvResult> kv_asymptotic(double nu, complex z, double tol = 1e-16) {
  const double mu4 = 4.0 * nu * nu;
  complex term{1.0, 0.0};
  KahanAccumulator<complex> sum;
  sum += term;
  double prev = 1.0;
  double err = 0.0;
  bool done = false;
  for (int k = 1; k <= kv_max_asymptotic_terms; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu4 - odd * odd) / (8.0 * k) / z;
    const double mag = std::abs(term);
    if (mag == 0.0) {
      // Half-integer order: the series terminates exactly.
      err = 0.0;
      done = true;
      break;
    }
    if (mag > prev) return std::nullopt;
    if (mag <= tol * std::abs(sum.value())) {
      err = mag;
      done = true;
      break;
    }
    sum += term;
    prev = mag;
  }
  if (!done) return std::nullopt;
  const complex pref = std::sqrt(std::numbers::pi / (2.0 * z)) * std::exp(-z);
  return KvResult{pref * sum.value(), err * std::abs(pref)};
}

/// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt by the trapezoidal rule,
/// halving the step until successive sums agree. The integrand is analytic in
/// a strip and decays double exponentially, so the rule converges
/// exponentially in 1/h.
inline std::optional<KvResult> kv_integral(double nu, complex z, double tol = 1e-15) {
  const double re = z.real();
  if (!(re > 0.0)) return std::nullopt;
  // exp(-z) is factored out; the remaining integrand is exp(-2 z sinh^2(t/2)) cosh(nu t).
  auto f = [&](double t) {
    const double s = std::sinh(0.5 * t);
    return std::exp(-2.0 * z * s * s) * std::cosh(nu * t);
  };
  // Truncate where 2 Re(z) sinh^2(t/2) - |nu| t > 45 (relative size < 1e-19).
  double tmax = 1.0;
  while (2.0 * re * std::sinh(0.5 * tmax) * std::sinh(0.5 * tmax) - std::abs(nu) * tmax < 45.0) tmax += 0.25;

  double h = 0.25;
  auto trapezoid = [&](double step) {
    KahanAccumulator<complex> acc;
    acc += 0.5 * f(0.0);
    const int n = static_cast<int>(std::ceil(tmax / step));
    for (int j = 1; j <= n; ++j) acc += f(j * step);
    return step * acc.value();
  };
  complex prev = trapezoid(h);
  for (int level = 0; level < 14; ++level) {
    h *= 0.5;
    const complex cur = trapezoid(h);
    const double diff = std::abs(cur - prev);
    if (diff <= tol * std::abs(cur)) {
      const complex ez = std::exp(-z);
      return KvResult{ez * cur, diff * std::abs(ez)};
    }
    prev = cur;
  }
  return std::nullopt;
}

}  // namespace detail

/// Modified Bessel function K_nu(z) for Re z > 0 and |nu| <= 10.
///
/// Uses the Hankel asymptotic series for |z| >= 20 and the cosh-integral
/// representation otherwise (or when the asymptotic series cannot reach
/// full precision).
inline complex kv_complex(double nu, complex z) {
  if (!(z.real() > 0.0)) throw domain_error("kv_complex: requires Re z > 0");
  if (!(std::abs(nu) <= 10.0)) throw domain_error("kv_complex: |nu| must not exceed 10");
  nu = std::abs(nu);
  if (std::abs(z) >= detail::kv_asymptotic_threshold) {
    if (auto r = detail::kv_asymptotic(nu, z)) return r->value;
  }
  if (auto r = detail::kv_integral(nu, z)) return r->value;
  throw convergence_error("kv_complex: neither the asymptotic series nor the integral converged");
}

inline complex kv_complex(double nu, double x) { return kv_complex(nu, complex(x, 0.0)); }

}  // namespace mxsum
