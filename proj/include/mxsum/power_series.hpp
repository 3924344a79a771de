#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mxsum/errors.hpp"

namespace mxsum {

/// Truncated even power series sum_{k=0}^{K} c_k x^{2k} with exact rational
/// coefficients.
struct PowerSeries {
  std::vector<mpq_class> coeffs;

  std::size_t size() const { return coeffs.size(); }
  const mpq_class& operator[](std::size_t k) const { return coeffs[k]; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs == b.coeffs; }
};

inline mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Product truncated to the shorter length.
inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  PowerSeries r{std::vector<mpq_class>(n, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) r.coeffs[i + j] += a[i] * b[j];
  return r;
}

/// Reciprocal series; the constant term must be nonzero.
inline PowerSeries reciprocal(const PowerSeries& d) {
  if (d.size() == 0 || d[0] == 0) throw domain_error("PowerSeries: reciprocal needs a nonzero constant term");
  const std::size_t n = d.size();
  PowerSeries r{std::vector<mpq_class>(n, 0)};
  r.coeffs[0] = 1 / d[0];
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class s = 0;
    for (std::size_t j = 1; j <= k; ++j) s += d[j] * r[k - j];
    r.coeffs[k] = -s / d[0];
  }
  return r;
}

inline PowerSeries operator/(const PowerSeries& n, const PowerSeries& d) { return n * reciprocal(d); }

namespace series {

/// sinh(x)/x = sum x^{2k}/(2k+1)!
inline PowerSeries sinhc(std::size_t terms) {
  PowerSeries s{std::vector<mpq_class>(terms)};
  for (std::size_t k = 0; k < terms; ++k) s.coeffs[k] = mpq_class(1, factorial(2 * k + 1));
  return s;
}

/// cosh(x) = sum x^{2k}/(2k)!
inline PowerSeries cosh(std::size_t terms) {
  PowerSeries s{std::vector<mpq_class>(terms)};
  for (std::size_t k = 0; k < terms; ++k) s.coeffs[k] = mpq_class(1, factorial(2 * k));
  return s;
}

/// x coth x = cosh x / (sinh(x)/x).
inline PowerSeries x_coth(std::size_t terms) { return cosh(terms) / sinhc(terms); }

}  // namespace series

}  // namespace mxsum
