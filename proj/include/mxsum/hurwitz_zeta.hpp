#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "mxsum/errors.hpp"
#include "mxsum/summation.hpp"

namespace mxsum {

namespace detail {

// B_{2j} / (2j)! for j = 1..12.
inline constexpr std::array<double, 12> bernoulli_over_factorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
};

}  // namespace detail

/// Hurwitz zeta function zeta(s, q) = sum_{n>=0} (n+q)^{-s} for real s > 1 and
/// Re q > 0, by Euler-Maclaurin summation.
inline complex hurwitz_zeta(double s, complex q) {
  if (!(s > 1.0)) throw domain_error("hurwitz_zeta: requires s > 1");
  if (!(q.real() > 0.0)) throw domain_error("hurwitz_zeta: requires Re q > 0");

  const int n_direct = 16 + static_cast<int>(std::ceil(std::abs(q.imag())));
  KahanAccumulator<complex> acc;
  for (int n = 0; n < n_direct; ++n) acc += std::pow(complex(n) + q, -s);

  const complex w = complex(n_direct) + q;
  acc += std::pow(w, 1.0 - s) / (s - 1.0);
  acc += 0.5 * std::pow(w, -s);

  // sum_j B_2j/(2j)! (s)_{2j-1} w^{-s-2j+1}
  complex wpow = std::pow(w, -s - 1.0);
  const complex w2inv = 1.0 / (w * w);
  double rising = s;  // (s)_{2j-1}
  for (std::size_t j = 1; j <= detail::bernoulli_over_factorial.size(); ++j) {
    const complex term = detail::bernoulli_over_factorial[j - 1] * rising * wpow;
    acc += term;
    if (std::abs(term) < 1e-18 * std::abs(acc.value())) break;
    const double jj = static_cast<double>(j);
    rising *= (s + 2.0 * jj - 1.0) * (s + 2.0 * jj);
    wpow *= w2inv;
  }
  return acc.value();
}

}  // namespace mxsum
