#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mxsum/errors.hpp"

namespace mxsum {

using complex = std::complex<double>;

/// Kahan-compensated accumulator for real or complex values.
template <typename Value>
struct KahanAccumulator {
  Value sum = Value{0};
  Value compensation = Value{0};

  void add(Value value) {
    const Value y = value - compensation;
    const Value t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }

  KahanAccumulator& operator+=(Value value) {
    add(value);
    return *this;
  }

  Value value() const { return sum; }
};

/// Result of a series summation or a quadrature.
///
/// For series, last_term_magnitude is |last added term|. For quadrature it is
/// the difference between the last two refinement levels, which is also what
/// error_estimate carries.
template <typename Value>
struct SeriesSum {
  Value value{};
  int terms_used = 0;
  double last_term_magnitude = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const complex& z) { return std::abs(z); }

/// Cohen, Rodriguez Villegas and Zagier acceleration of sum_k terms[k], where
/// terms[k] = (-1)^k m_k. Exact for no particular class, but the error is
/// bounded by ~5.83^{-n} when m_k is a moment sequence on [0, 1].
template <typename Value>
Value cvz_sum(std::span<const Value> terms) {
  const std::size_t n = terms.size();
  if (n == 0) return Value{0};
  double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  Value s{0};
  for (std::size_t k = 0; k < n; ++k) {
    c = b - c;
    // terms[k] already carries (-1)^k; the algorithm wants m_k.
    const Value mk = (k % 2 == 0) ? terms[k] : -terms[k];
    s += c * mk;
    const double kk = static_cast<double>(k);
    const double nn = static_cast<double>(n);
    b = (kk + nn) * (kk - nn) * b / ((kk + 0.5) * (kk + 1.0));
  }
  return s / d;
}

}  // namespace detail

/// Accelerated value of an alternating series from its leading terms.
///
/// terms holds the signed terms t_0, t_1, ... The tail of the sequence must
/// alternate in sign and decrease in magnitude. The error estimate is the
/// difference between the accelerated sums using all terms and all but the
/// last quarter.
template <typename Value>
SeriesSum<Value> alternating_accelerated_sum(std::span<const Value> terms, double tol) {
  const std::size_t n = terms.size();
  if (n < 8) throw precondition_error("alternating_accelerated_sum: need at least 8 terms");
  for (const auto& t : terms) {
    if (!std::isfinite(detail::magnitude(t))) throw precondition_error("alternating_accelerated_sum: non-finite term");
  }

  // Check the second half: strict alternation and decay.
  const std::size_t start = n / 2;
  for (std::size_t k = start; k + 1 < n; ++k) {
    const double a = std::real(complex(terms[k]));
    const double b = std::real(complex(terms[k + 1]));
    if (!(a * b < 0.0)) throw precondition_error("alternating_accelerated_sum: terms do not alternate in sign");
    if (detail::magnitude(terms[k + 1]) > detail::magnitude(terms[k])) {
      throw precondition_error("alternating_accelerated_sum: term magnitudes are not decreasing");
    }
  }
  if (!(detail::magnitude(terms[n - 1]) < detail::magnitude(terms[start]))) {
    throw precondition_error("alternating_accelerated_sum: terms do not decay");
  }

  const Value full = detail::cvz_sum(terms);
  const Value shorter = detail::cvz_sum(terms.first(n - n / 4));
  SeriesSum<Value> out;
  out.value = full;
  out.terms_used = static_cast<int>(n);
  out.last_term_magnitude = detail::magnitude(terms[n - 1]);
  out.error_estimate = detail::magnitude(full - shorter);
  out.converged = out.error_estimate <= tol * detail::magnitude(full) || out.error_estimate == 0.0;
  if (!out.converged) throw convergence_error("alternating_accelerated_sum: tolerance not reached");
  return out;
}

template <typename Value>
SeriesSum<Value> alternating_accelerated_sum(const std::vector<Value>& terms, double tol) {
  return alternating_accelerated_sum(std::span<const Value>(terms), tol);
}

}  // namespace mxsum
