#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "mxsum/errors.hpp"

namespace mxsum {

/// Gamma function of a real argument. Throws domain_error at the poles.
inline double gamma_real(double x) {
  if (std::isnan(x)) throw domain_error("gamma_real: NaN argument");
  if (x <= 0.0 && x == std::nearbyint(x)) throw domain_error("gamma_real: pole at non-positive integer");
  return std::tgamma(x);
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), by direct product.
inline double pochhammer(double x, int k) {
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= x + j;
  return p;
}

inline bool is_integer(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

}  // namespace mxsum
