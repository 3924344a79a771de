#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "mxsum/bigfloat.hpp"
#include "mxsum/errors.hpp"

namespace mxsum {

enum class UKind { tanh, coth };

/// Polynomial p(u) with exact integer coefficients, coeffs[i] multiplying u^i.
///
/// Represents the m-th derivative of tanh x (u = tanh x) or coth x
/// (u = coth x). Both functions satisfy u' = 1 - u^2, so the polynomials are
/// the same for both kinds; the tag records which substitution applies.
struct UPolynomial {
  std::vector<mpz_class> coeffs;
  UKind kind = UKind::tanh;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const UPolynomial& a, const UPolynomial& b) {
    return a.kind == b.kind && a.coeffs == b.coeffs;
  }
};

inline constexpr int max_derivative_order = 200;

namespace detail {

inline void trim(std::vector<mpz_class>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

/// p -> (1 - u^2) p'(u).
inline UPolynomial derivative_step(const UPolynomial& p) {
  const std::size_t n = p.coeffs.size();
  std::vector<mpz_class> d(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const mpz_class c = p.coeffs[i] * static_cast<unsigned long>(i);
    d[i - 1] += c;
    d[i + 1] -= c;
  }
  trim(d);
  return UPolynomial{std::move(d), p.kind};
}

inline UPolynomial identity_polynomial(UKind kind) { return UPolynomial{{0, 1}, kind}; }

}  // namespace detail

/// d^m/dx^m of tanh x (kind tanh) or coth x (kind coth) as a polynomial in u.
inline UPolynomial derivative_poly(UKind kind, int m) {
  if (m < 0 || m > max_derivative_order) throw precondition_error("derivative_poly: order must be in [0, 200]");
  UPolynomial p = detail::identity_polynomial(kind);
  for (int j = 0; j < m; ++j) p = detail::derivative_step(p);
  return p;
}

inline UPolynomial tanh_derivative_poly(int m) { return derivative_poly(UKind::tanh, m); }
inline UPolynomial coth_derivative_poly(int m) { return derivative_poly(UKind::coth, m); }

/// Memoizing builder: each request starts from the highest cached order not
/// above it. Not thread-safe; give each thread its own cache.
class DerivativePolyCache {
 public:
  explicit DerivativePolyCache(UKind kind) : kind_(kind) { cache_.emplace(0, detail::identity_polynomial(kind)); }

  const UPolynomial& get(int m) {
    if (m < 0 || m > max_derivative_order) throw precondition_error("derivative_poly: order must be in [0, 200]");
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    auto base = std::prev(cache_.upper_bound(m));
    UPolynomial p = base->second;
    for (int j = base->first; j < m; ++j) p = detail::derivative_step(p);
    return cache_.emplace(m, std::move(p)).first->second;
  }

 private:
  UKind kind_;
  std::map<int, UPolynomial> cache_;
};

/// Horner evaluation of p at u, in the precision of u.
inline BigFloat evaluate(const UPolynomial& p, const BigFloat& u) {
  BigFloat acc(u.precision());
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc *= u;
    acc += *it;
  }
  return acc;
}

/// Upper bound for log10 of sum_i |c_i| |u|^i, used to size working precision.
inline double log10_magnitude_bound(const UPolynomial& p, double abs_u) {
  double best = -1e300;
  const double lu = std::log10(std::max(abs_u, 1e-300));
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i] == 0) continue;
    best = std::max(best, log10_abs(p.coeffs[i]) + static_cast<double>(i) * lu);
  }
  return best + std::log10(static_cast<double>(p.coeffs.size()));
}

}  // namespace mxsum
