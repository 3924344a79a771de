#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "mxsum/errors.hpp"
#include "mxsum/params.hpp"
#include "mxsum/quadrature.hpp"
#include "mxsum/summation.hpp"

namespace mxsum {

namespace detail {

/// (n^2 + a^2)^{-mu}; real arithmetic for real a so the result stays real.
inline complex inverse_power(double n, const complex& a, double mu) {
  if (mu == 0.0) return complex{1.0, 0.0};
  if (a.imag() == 0.0) return complex{std::pow(n * n + a.real() * a.real(), -mu), 0.0};
  return std::pow(complex(n * n) + a * a, -mu);
}

inline constexpr int direct_sum_guard_terms = 20;
inline constexpr int cvz_stages = 40;
inline constexpr int cvz_reference_stages = 30;

inline Evaluation direct_sum_decaying(const SeriesParams& p, double tol) {
  const double s = sign_factor(p.sign);
  const double q = std::exp(-p.lambda);
  const double geometric_tail = 1.0 / (1.0 - q);
  const double abs_a = std::abs(p.a);
  KahanAccumulator<complex> acc;
  double weight = 1.0;  // (+-1)^n e^{-lambda n}
  int n = 0;
  int guard = -1;
  double bound = 0.0;
  for (;; ++n) {
    const complex term = weight * inverse_power(n, p.a, p.mu);
    acc += term;
    bound = std::abs(weight) * std::abs(inverse_power(n + 1, p.a, p.mu)) * q;
    if (guard < 0) {
      if (n > abs_a && bound * geometric_tail < tol * std::abs(acc.value())) guard = direct_sum_guard_terms;
    } else if (guard-- == 0) {
      break;
    }
    weight *= s * q;
    if (weight == 0.0) break;
  }
  Evaluation e;
  e.value = acc.value();
  e.method = Method::oracle;
  e.truncation_index = n;
  e.error_estimate = bound * geometric_tail;
  e.notes = "compensated direct summation";
  return e;
}

inline Evaluation direct_sum_alternating_lambda0(const SeriesParams& p) {
  std::vector<complex> terms;
  for (int n = 0; n < cvz_stages; ++n) terms.push_back((n % 2 == 0 ? 1.0 : -1.0) * inverse_power(n, p.a, p.mu));
  const complex full = cvz_sum(std::span<const complex>(terms));
  const complex ref = cvz_sum(std::span<const complex>(terms).first(cvz_reference_stages));
  Evaluation e;
  e.value = p.real_a() ? complex(full.real(), 0.0) : full;
  e.method = Method::oracle;
  e.truncation_index = cvz_stages - 1;
  e.error_estimate = std::abs(full - ref);
  e.notes = "Cohen-Rodriguez Villegas-Zagier acceleration";
  return e;
}

/// sum_{n>=0} (n^2+a^2)^{-mu} for mu > 1/2: direct part up to N-1 plus an
/// Euler-Maclaurin tail with the integral done by exp-sinh quadrature.
inline Evaluation direct_sum_plus_lambda0(const SeriesParams& p, double tol) {
  const double mu = p.mu;
  const complex a = p.a;
  const complex a2 = a * a;
  const int N = std::max(200, static_cast<int>(std::ceil(4.0 * std::abs(a))));
  KahanAccumulator<complex> acc;
  for (int n = 0; n < N; ++n) acc += inverse_power(n, a, mu);

  const double x = N;
  const complex g = complex(x * x) + a2;
  auto gp = [&](double e) { return std::pow(g, e); };
  const complex f = gp(-mu);
  const complex f1 = -2.0 * mu * x * gp(-mu - 1.0);
  const complex f3 = 12.0 * mu * (mu + 1.0) * x * gp(-mu - 2.0) -
                     8.0 * mu * (mu + 1.0) * (mu + 2.0) * x * x * x * gp(-mu - 3.0);
  const auto integral = integrate(
      [&](double t) { return std::pow(complex(t * t) + a2, -mu); },
      QuadratureSpec{x, std::numeric_limits<double>::infinity(), 0.0, std::max(tol, 1e-15), 12});
  acc += integral.value;
  acc += 0.5 * f;
  acc += -f1 / 12.0;
  acc += f3 / 720.0;

  Evaluation e;
  e.value = p.real_a() ? complex(acc.value().real(), 0.0) : acc.value();
  e.method = Method::oracle;
  e.truncation_index = N - 1;
  // Next Euler-Maclaurin term is O(f^{(5)}(N)/30240) ~ mu (mu+1)...(mu+4) 32 N^{-2mu-5}/30240.
  e.error_estimate = integral.error_estimate +
                     32.0 * mu * (mu + 1) * (mu + 2) * (mu + 3) * (mu + 4) * std::pow(x, -2.0 * mu - 5.0) / 30240.0;
  e.notes = "direct sum with Euler-Maclaurin tail";
  return e;
}

}  // namespace detail

/// Reference evaluation of S_mu^{+-}(a; lambda) straight from the defining series.
///
/// lambda > 0: compensated summation until the geometric tail bound falls
/// below tol * |sum|, plus guard terms. lambda = 0: the alternating series is
/// accelerated (mu > 0), the plain series gets an Euler-Maclaurin tail
/// (mu > 1/2).
inline Evaluation direct_sum(const SeriesParams& p, double tol = 1e-15) {
  p.validate();
  if (p.lambda > 0.0) return detail::direct_sum_decaying(p, tol);
  if (p.sign == Sign::minus) {
    if (!(p.mu > 0.0)) throw precondition_error("direct_sum: lambda = 0 alternating series needs mu > 0");
    return detail::direct_sum_alternating_lambda0(p);
  }
  if (!(p.mu > 0.5)) throw domain_error("direct_sum: series diverges for lambda = 0, plus sign, mu <= 1/2");
  return detail::direct_sum_plus_lambda0(p, tol);
}

}  // namespace mxsum
