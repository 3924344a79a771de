#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

#include "mxsum/errors.hpp"
#include "mxsum/summation.hpp"

namespace mxsum {

enum class Sign { plus, minus };

inline std::string_view to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }
inline double sign_factor(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

/// Parameter point of S_mu^{+-}(a; lambda) = sum_{n>=0} (+-1)^n e^{-lambda n} / (n^2 + a^2)^mu.
struct SeriesParams {
  double mu = 0.5;
  double lambda = 1.0;
  complex a{1.0, 0.0};
  Sign sign = Sign::minus;

  /// Throws unless mu >= 0, lambda >= 0 and |arg a| < pi/2.
  void validate() const {
    if (!(mu >= 0.0) || !std::isfinite(mu)) throw precondition_error("SeriesParams: mu must be finite and >= 0");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw precondition_error("SeriesParams: lambda must be finite and >= 0");
    if (!(a.real() > 0.0) || !std::isfinite(a.imag())) throw domain_error("SeriesParams: a must satisfy |arg a| < pi/2");
  }

  bool real_a() const { return a.imag() == 0.0; }
};

enum class Method {
  oracle,
  small_a,
  h_quadrature,
  algebraic,
  tail,
  full,
  j_quadrature,
  j_asymptotic,
  integer_mu,
  lambda0,
  mu_step,
};

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::oracle: return "oracle";
    case Method::small_a: return "small-a";
    case Method::h_quadrature: return "h-quadrature";
    case Method::algebraic: return "algebraic";
    case Method::tail: return "tail";
    case Method::full: return "full";
    case Method::j_quadrature: return "j-mu";
    case Method::j_asymptotic: return "j-mu-asymptotic";
    case Method::integer_mu: return "integer-mu";
    case Method::lambda0: return "lambda0";
    case Method::mu_step: return "mu-step";
  }
  return "?";
}

/// A computed value with its provenance and diagnostics.
struct Evaluation {
  complex value{};
  Method method = Method::oracle;
  double error_estimate = 0.0;
  /// Series index at which summation stopped (terms are 0..truncation_index).
  int truncation_index = 0;
  int tail_terms_used = 0;
  /// Asymptotic routes: first k whose term exceeds its predecessor, or -1.
  int first_increasing_term = -1;
  std::string notes;
};

/// One term of an exponentially small K-Bessel sum.
struct TailTerm {
  int k = 0;
  complex X{};
  complex kv{};
  /// arg(X^{mu-1/2} K_{1/2-mu}(X)) in (-pi, pi].
  double theta = 0.0;
  /// |K_{1/2-mu}(X) / X^{1/2-mu}|.
  double magnitude = 0.0;
};

}  // namespace mxsum
