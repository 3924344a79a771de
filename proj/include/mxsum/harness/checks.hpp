#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "mxsum/bessel_tail.hpp"
#include "mxsum/branch_integrals.hpp"
#include "mxsum/direct_sum.hpp"
#include "mxsum/errors.hpp"
#include "mxsum/harness/report.hpp"
#include "mxsum/params.hpp"
#include "mxsum/special.hpp"

namespace mxsum::harness {

inline constexpr double tail_agreement_tol = 1e-11;
inline constexpr double check_quadrature_tol = 1e-16;

/// Base-10 exponent of |x| in scientific notation.
inline int decimal_exponent(double x) { return static_cast<int>(std::floor(std::log10(std::abs(x)))); }

/// Compares the subtraction S - 1/(2a^{2mu}) - H^- (oracle and quadrature) with
/// the Bessel tail T^- for the alternating sum at real a.
/// computed holds the subtraction, reference the tail. The tolerance is
/// 1e-11 relative, widened to the binary64 resolution of the subtraction
/// (a few ulps of S) once the tail gets that small.
inline ReportRow tail_agreement_check(double a = 3.0, double lambda = 1.0, double mu = 0.5) {
  const SeriesParams p{mu, lambda, {a, 0.0}, Sign::minus};
  const double total = direct_sum(p, 1e-17).value.real();
  const double s = total - 0.5 * std::pow(a, -2.0 * mu) - h_minus_quadrature(p, check_quadrature_tol).value.real();
  const double t = bessel_tail_minus(p).evaluation.value.real();
  ReportRow row;
  row.table = "tail";
  char id[32];
  std::snprintf(id, sizeof id, "a=%g", a);
  row.row_id = id;
  row.sign = Sign::minus;
  row.mu = mu;
  row.lambda = lambda;
  row.a = p.a;
  row.computed = s;
  row.reference = t;
  const double resolution = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(total) / std::abs(t);
  grade(row, std::max(tail_agreement_tol, resolution));
  return row;
}

/// What is fitted in decay_rate_fit.
enum class DecayTarget {
  /// The exponentially small remainder S - (algebraic part), summed as the Bessel tail.
  tail,
  /// The same remainder by subtraction: oracle minus leading term minus integrals.
  subtraction,
  /// The phase-free envelope: tail prefactor times the sum of |K_nu(X_k)/X_k^nu|.
  envelope,
};

inline std::string_view to_string(DecayTarget t) {
  switch (t) {
    case DecayTarget::tail: return "tail";
    case DecayTarget::subtraction: return "subtraction";
    case DecayTarget::envelope: return "envelope";
  }
  return "?";
}

inline double decay_remainder(const SeriesParams& p, DecayTarget target) {
  switch (target) {
    case DecayTarget::tail:
      return (p.sign == Sign::minus ? bessel_tail_minus(p) : bessel_tail_plus(p)).evaluation.value.real();
    case DecayTarget::envelope: {
      const TailResult t = p.sign == Sign::minus ? bessel_tail_minus(p) : bessel_tail_plus(p);
      double sum = 0.0;
      for (const auto& term : t.terms) sum += term.magnitude;
      const double pi = std::numbers::pi;
      return std::pow(2.0, 1.5 - p.mu) * std::sqrt(pi) * std::pow(p.a.real(), 1.0 - 2.0 * p.mu) /
             (gamma_real(p.mu) * std::abs(std::sin(pi * p.mu))) * sum;
    }
    case DecayTarget::subtraction: {
      double r = direct_sum(p, 1e-17).value.real() - 0.5 * std::pow(p.a.real(), -2.0 * p.mu);
      if (p.sign == Sign::minus) {
        r -= h_minus_quadrature(p, check_quadrature_tol).value.real();
      } else {
        r -= h_plus_quadrature(p, check_quadrature_tol).value.real();
        r -= j_mu_quadrature(p, check_quadrature_tol).value.real();
      }
      return r;
    }
  }
  throw precondition_error("decay_remainder: unknown target");
}

/// Least-squares slope of ln|R(a)| + (2mu - 1) ln a against a over a_grid,
/// where R is the exponentially small remainder. Expected near -pi for the
/// alternating sum and -2pi for the plain one.
inline double decay_rate_fit(Sign sign, double mu, double lambda, const std::vector<double>& a_grid,
                             DecayTarget target = DecayTarget::tail) {
  if (a_grid.size() < 4) throw precondition_error("decay_rate_fit: need at least 4 grid points");
  std::vector<double> ys;
  for (double a : a_grid) {
    if (!(a > 0.0)) throw precondition_error("decay_rate_fit: grid points must be positive reals");
    const SeriesParams p{mu, lambda, {a, 0.0}, sign};
    const double r = decay_remainder(p, target);
    if (!(std::abs(r) > 0.0) || !std::isfinite(r)) {
      throw domain_error("decay_rate_fit: remainder underflows at a = " + std::to_string(a));
    }
    ys.push_back(std::log(std::abs(r)) + (2.0 * mu - 1.0) * std::log(a));
  }
  const double n = static_cast<double>(a_grid.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    mx += a_grid[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    sxy += (a_grid[i] - mx) * (ys[i] - my);
    sxx += (a_grid[i] - mx) * (a_grid[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace mxsum::harness
