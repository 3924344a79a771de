#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <type_traits>

#include "mxsum/errors.hpp"
#include "mxsum/summation.hpp"

namespace mxsum {

/// Integration interval and accuracy request for integrate().
///
/// The integrand may behave like (t - lower)^(-left_singularity_exponent)
/// near the lower limit. Set upper to +infinity for a semi-infinite range;
/// the integrand must then decay.
struct QuadratureSpec {
  double lower = 0.0;
  double upper = 1.0;
  double left_singularity_exponent = 0.0;
  double target_rel_tol = 1e-14;
  int max_levels = 10;
};

namespace detail {

template <typename F>
auto call_integrand(F& f, double x, double offset) {
  if constexpr (std::is_invocable_v<F&, double, double>) {
    return f(x, offset);
  } else {
    return f(x);
  }
}

template <typename F>
using integrand_value_t = std::decay_t<decltype(call_integrand(std::declval<F&>(), 0.0, 0.0))>;

}  // namespace detail

/// Double-exponential quadrature: tanh-sinh on a finite interval, exp-sinh on
/// [lower, inf).
///
/// The integrand is called as f(x) or f(x, x - lower); the second argument is
/// accurate even where x - lower underflows relative to x, which is what an
/// integrand with an endpoint singularity needs. Each level halves the step;
/// the error estimate is the change between levels.
template <typename F>
auto integrate(F&& f, const QuadratureSpec& spec) -> SeriesSum<detail::integrand_value_t<F>> {
  using Value = detail::integrand_value_t<F>;
  const double alpha = spec.left_singularity_exponent;
  if (!(alpha < 1.0)) throw precondition_error("integrate: left singularity exponent must be < 1");
  if (!(spec.target_rel_tol > 0.0)) throw precondition_error("integrate: tolerance must be positive");
  const bool infinite = std::isinf(spec.upper);
  if (!infinite && !(spec.upper > spec.lower)) throw precondition_error("integrate: empty interval");

  constexpr double half_pi = 0.5 * std::numbers::pi;
  const double length = infinite ? 0.0 : spec.upper - spec.lower;

  // Node range. Near a t^-alpha endpoint w*f decays like exp(-(1-alpha) pi sinh|s|);
  // stop once that is below 1e-20, or before offsets underflow.
  const double decay_needed = 46.0 / ((1.0 - std::max(alpha, 0.0)) * std::numbers::pi);
  // exp-sinh decays only half as fast at the left end as tanh-sinh.
  const double s_left = infinite ? std::min(std::asinh(2.0 * decay_needed), std::asinh(690.0 / half_pi))
                                 : std::min(std::asinh(decay_needed), std::asinh(690.0 / std::numbers::pi));
  const double s_right = infinite ? std::asinh(690.0 / half_pi) : s_left;

  // Returns w(s) * f(x(s)) or nothing if the node is degenerate.
  auto node = [&](double s, Value& out) -> bool {
    const double u = half_pi * std::sinh(s);
    const double dudx = half_pi * std::cosh(s);
    double offset;
    double weight;
    if (infinite) {
      offset = std::exp(u);
      weight = dudx * offset;
    } else {
      // offset = L (1 + tanh u)/2 = L / (1 + e^{-2u}); weight = L/2 * dudx / cosh^2 u.
      const double e = std::exp(-2.0 * std::abs(u));
      offset = (u >= 0.0) ? length / (1.0 + e) : length * e / (1.0 + e);
      weight = length * dudx * 2.0 * e / ((1.0 + e) * (1.0 + e));
    }
    if (!(offset > 0.0) || weight == 0.0 || !std::isfinite(offset) || !std::isfinite(weight)) return false;
    if (!infinite && offset >= length) return false;
    const double x = spec.lower + offset;
    const Value fx = detail::call_integrand(f, x, offset);
    const double mag = detail::magnitude(fx);
    if (std::isnan(mag)) throw integrand_error("integrate: integrand returned NaN");
    out = weight * fx;
    return true;
  };

  KahanAccumulator<Value> total;  // sum of w*f over all nodes so far (step-free)
  double abs_total = 0.0;
  int evaluations = 0;

  // One sweep over nodes s = k h for k in the given parity class.
  auto sweep = [&](double h, bool odd_only) {
    Value v{};
    if (!odd_only && node(0.0, v)) {
      total += v;
      abs_total += detail::magnitude(v);
      ++evaluations;
    }
    for (int dir : {1, -1}) {
      const double limit = dir > 0 ? s_right : s_left;
      int small_run = 0;
      for (int k = 1;; ++k) {
        if (odd_only && k % 2 == 0) continue;
        const double s = dir * k * h;
        if (std::abs(s) > limit) break;
        if (!node(s, v)) break;
        ++evaluations;
        total += v;
        const double mag = detail::magnitude(v);
        abs_total += mag;
        // Outer nodes of an exponentially decaying integrand: stop once negligible.
        if (mag <= 1e-22 * detail::magnitude(total.value())) {
          if (++small_run >= 4) break;
        } else {
          small_run = 0;
        }
      }
    }
  };

  double h = 0.5;
  sweep(h, false);
  Value previous = h * total.value();
  SeriesSum<Value> out;
  for (int level = 1; level <= spec.max_levels; ++level) {
    h *= 0.5;
    sweep(h, true);
    const Value current = h * total.value();
    const double diff = detail::magnitude(current - previous);
    const double scale = detail::magnitude(current);
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() * h * abs_total;
    out.value = current;
    out.terms_used = evaluations;
    out.last_term_magnitude = diff;
    out.error_estimate = diff;
    if (level >= 3 && (diff <= spec.target_rel_tol * scale || diff <= noise)) {
      out.converged = true;
      return out;
    }
    previous = current;
  }
  throw convergence_error("integrate: no convergence within max_levels");
}

}  // namespace mxsum
