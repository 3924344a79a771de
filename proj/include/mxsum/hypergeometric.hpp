#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "mxsum/errors.hpp"
#include "mxsum/summation.hpp"

namespace mxsum {

namespace detail {

inline constexpr int pfq_max_terms = 100000;

template <typename Value>
SeriesSum<Value> pfq_sum(std::span<const Value> num, std::span<const Value> den, Value z, double tol) {
  SeriesSum<Value> out;
  KahanAccumulator<Value> acc;
  Value term{1.0};
  acc += term;
  int small = 0;
  for (int k = 0; k < pfq_max_terms; ++k) {
    const double kk = static_cast<double>(k);
    Value ratio = z / (kk + 1.0);
    for (const auto& a : num) ratio *= a + kk;
    for (const auto& b : den) {
      const Value d = b + kk;
      if (d == Value{0.0}) throw domain_error("pfq_series: denominator parameter is a non-positive integer");
      ratio /= d;
    }
    term *= ratio;
    acc += term;
    const double mag = magnitude(term);
    out.terms_used = k + 2;
    out.last_term_magnitude = mag;
    if (mag <= tol * magnitude(acc.value())) {
      if (++small >= 2) {
        out.value = acc.value();
        out.error_estimate = mag;
        out.converged = true;
        return out;
      }
    } else {
      small = 0;
    }
  }
  throw convergence_error("pfq_series: term cap reached before convergence");
}

}  // namespace detail

/// Generalized hypergeometric series pFq(num; den; z) for |z| < 1.
///
/// Converged when two successive terms fall below tol * |sum|. With all
/// parameters and z real the computation runs in real arithmetic and the
/// imaginary part of the result is exactly zero.
inline SeriesSum<complex> pfq_series(std::span<const complex> num, std::span<const complex> den, complex z,
                                     double tol) {
  if (!(std::abs(z) < 1.0)) throw domain_error("pfq_series: requires |z| < 1");
  if (z == complex{0.0}) return SeriesSum<complex>{complex{1.0}, 1, 0.0, 0.0, true};

  auto is_real = [](const complex& c) { return c.imag() == 0.0; };
  bool all_real = is_real(z);
  for (const auto& a : num) all_real = all_real && is_real(a);
  for (const auto& b : den) all_real = all_real && is_real(b);

  if (all_real) {
    std::vector<double> rn, rd;
    for (const auto& a : num) rn.push_back(a.real());
    for (const auto& b : den) rd.push_back(b.real());
    const auto r = detail::pfq_sum<double>(rn, rd, z.real(), tol);
    return SeriesSum<complex>{complex{r.value, 0.0}, r.terms_used, r.last_term_magnitude, r.error_estimate,
                              r.converged};
  }
  return detail::pfq_sum<complex>(num, den, z, tol);
}

inline SeriesSum<complex> pfq_series(const std::vector<complex>& num, const std::vector<complex>& den, complex z,
                                     double tol) {
  return pfq_series(std::span<const complex>(num), std::span<const complex>(den), z, tol);
}

}  // namespace mxsum
