#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "mxsum/coefficients.hpp"
#include "mxsum/evaluators.hpp"
#include "mxsum/numeric.hpp"

using mxsum::complex;
using mxsum::Evaluation;
using mxsum::SeriesParams;
using mxsum::Sign;

namespace {

constexpr double pi = std::numbers::pi;

double rel(complex got, complex want) { return std::abs(got - want) / std::abs(want); }

SeriesParams P(double mu, double lambda, complex a, Sign s = Sign::minus) { return SeriesParams{mu, lambda, a, s}; }

complex leading(const SeriesParams& p) { return 0.5 * std::pow(p.a, -2.0 * p.mu); }

}  // namespace

// ---- direct_sum ----

TEST(DirectSum, GeometricCaseMuZero) {
  const double e = std::exp(1.0);
  EXPECT_LT(rel(mxsum::direct_sum(P(0.0, 1.0, 1.0)).value, e / (e + 1.0)), 1e-15);
  EXPECT_LT(rel(mxsum::direct_sum(P(0.0, 1.0, 1.0, Sign::plus)).value, e / (e - 1.0)), 1e-15);
}

TEST(DirectSum, ReferenceValues) {
  EXPECT_NEAR(mxsum::direct_sum(P(0.5, 1.0, 6.0)).value.real(), 0.122060, 5e-7);
  EXPECT_NEAR(mxsum::direct_sum(P(0.25, 1.0, 10.0, Sign::plus)).value.real(), 0.498789, 5e-7);
}

TEST(DirectSum, AlternatingAtLambdaZeroMatchesPartialFractions) {
  const complex want = 0.5 * (1.0 + pi / std::sinh(pi));
  EXPECT_LT(rel(mxsum::direct_sum(P(1.0, 0.0, 1.0)).value, want), 1e-13);
}

TEST(DirectSum, PlainAtLambdaZeroMatchesCotangentIdentity) {
  // sum_{n>=0} 1/(n^2+a^2) = 1/(2a^2) + pi coth(pi a)/(2a)
  const double a = 2.0;
  const complex want = 0.5 / (a * a) + pi / std::tanh(pi * a) / (2.0 * a);
  EXPECT_LT(rel(mxsum::direct_sum(P(1.0, 0.0, a, Sign::plus)).value, want), 1e-13);
}

TEST(DirectSum, RejectsDivergentAndInvalidInput) {
  EXPECT_THROW(mxsum::direct_sum(P(0.5, 0.0, 2.0, Sign::plus)), mxsum::domain_error);
  EXPECT_THROW(mxsum::direct_sum(P(0.0, 0.0, 2.0)), mxsum::precondition_error);
  EXPECT_THROW(mxsum::direct_sum(P(0.5, -1.0, 2.0)), mxsum::precondition_error);
  EXPECT_THROW(mxsum::direct_sum(P(0.5, 1.0, complex(-1.0, 1.0))), mxsum::domain_error);
}

// ---- branch integrals and the small-a series ----

TEST(HMinus, VanishesAtLambdaZero) {
  EXPECT_EQ(mxsum::h_minus_quadrature(P(0.5, 0.0, 3.0)).value, complex(0.0));
  EXPECT_EQ(mxsum::h_plus_quadrature(P(0.5, 0.0, 3.0, Sign::plus)).value, complex(0.0));
}

TEST(HMinus, AgreesWithSmallASeriesAtUnitA) {
  const auto p = P(0.5, 1.0, 1.0);
  EXPECT_LT(rel(mxsum::h_minus_quadrature(p).value, mxsum::small_a_minus(p, 40).value), 1e-12);
}

TEST(HMinus, RejectsMuAtLeastOne) {
  EXPECT_THROW(mxsum::h_minus_quadrature(P(1.0, 1.0, 2.0)), mxsum::precondition_error);
  EXPECT_THROW(mxsum::h_plus_quadrature(P(1.5, 1.0, 2.0)), mxsum::precondition_error);
}

TEST(SmallA, AgreesWithQuadrature) {
  const auto p = P(0.5, 1.0, 0.5);
  EXPECT_LT(rel(mxsum::small_a_minus(p, 40).value, mxsum::h_minus_quadrature(p).value), 1e-12);
  const auto q = P(0.25, 0.5, 1.0);
  EXPECT_LT(rel(mxsum::small_a_minus(q, 40).value, mxsum::h_minus_quadrature(q).value), 1e-10);
}

TEST(SmallA, ComplexArgumentInsideRadius) {
  const auto p = P(0.75, 1.0, complex(0.4, 0.3));
  EXPECT_LT(rel(mxsum::small_a_minus(p, 60).value, mxsum::h_minus_quadrature(p).value), 1e-12);
}

TEST(SmallA, VanishesAtLambdaZero) { EXPECT_EQ(mxsum::small_a_minus(P(0.5, 0.0, 0.5), 20).value, complex(0.0)); }

TEST(SmallA, ReportsNonConvergenceOutsideRadius) {
  EXPECT_THROW(mxsum::small_a_minus(P(0.5, 1.0, complex(0.9, 0.5)), 40), mxsum::convergence_error);
  EXPECT_THROW(mxsum::small_a_minus(P(0.5, 1.0, 2.0), 40), mxsum::convergence_error);
}

TEST(HPlus, MatchesTermwiseExpansion) {
  // H^+ = a^{1-2mu} (lambda/pi) sum_k (-1)^k A_k a^{2k} int_0^1 e^{-pi a t} t^{2k} (1-t^2)^{-mu} dt,
  // convergent for a < 1 (radius of the A_k series).
  const double mu = 0.25, lambda = 1.0, a = 0.5;
  const auto A = mxsum::a_coefficients(lambda, 40);
  double sum = 0.0;
  for (int k = 0; k <= 40; ++k) {
    auto f = [&](double, double v) {
      const double t = 1.0 - v;
      return std::exp(-pi * a * t) * std::pow(t, 2 * k) * std::pow(v * (2.0 - v), -mu);
    };
    const double moment = mxsum::integrate(f, mxsum::QuadratureSpec{0.0, 1.0, mu, 1e-15, 12}).value;
    sum += (k % 2 == 0 ? 1.0 : -1.0) * A.values[static_cast<std::size_t>(k)] * std::pow(a, 2 * k) * moment;
  }
  const double want = std::pow(a, 1.0 - 2.0 * mu) * lambda / pi * sum;
  EXPECT_LT(rel(mxsum::h_plus_quadrature(P(mu, lambda, a, Sign::plus)).value, want), 1e-10);
}

TEST(JMu, ExactCases) {
  EXPECT_LT(rel(mxsum::j_mu_quadrature(P(0.0, 2.0, 3.0)).value, 0.5), 1e-14);
  EXPECT_LT(rel(mxsum::j_mu_quadrature(P(1.0, 1.0, 1.0)).value, 0.62144962423581336), 1e-13);
}

TEST(JMu, AsymptoticAgreesWithinFirstOmittedTerm) {
  for (auto [a, K] : std::vector<std::pair<double, int>>{{10.0, 5}, {20.0, 3}}) {
    const auto p = P(0.25, 1.0, a);
    const auto asym = mxsum::j_mu_asymptotic(p, K);
    const auto quad = mxsum::j_mu_quadrature(p);
    EXPECT_LE(std::abs(asym.value - quad.value), asym.error_estimate) << a;
    EXPECT_GT(asym.error_estimate, 0.0);
  }
}

TEST(JMu, AsymptoticMuZeroIsExact) {
  const auto e = mxsum::j_mu_asymptotic(P(0.0, 1.5, 4.0), 6);
  EXPECT_LT(rel(e.value, 1.0 / 1.5), 1e-15);
  EXPECT_EQ(e.error_estimate, 0.0);
}

TEST(JMu, AsymptoticFlagsGrowingTerms) {
  const auto e = mxsum::j_mu_asymptotic(P(0.5, 1.0, 1.0), 10);
  EXPECT_GE(e.first_increasing_term, 1);
  EXPECT_LE(e.first_increasing_term, 10);
}

// ---- algebraic expansions ----

TEST(AlgebraicMinus, ReferenceErrors) {
  const auto p = P(0.5, 1.0, 6.0);
  const complex s = mxsum::direct_sum(p).value;
  EXPECT_NEAR(rel(mxsum::algebraic_minus(p, 0).value, s) / 1.775e-3, 1.0, 0.02);
  const auto q = P(0.5, 1.0, 10.0);
  EXPECT_NEAR(rel(mxsum::algebraic_minus(q, 8).value, mxsum::direct_sum(q).value) / 7.940e-14, 1.0, 0.02);
}

TEST(AlgebraicMinus, MuZeroIdentity) {
  const double e = std::exp(1.0);
  for (double a : {1.0, 3.0, 7.0}) {
    EXPECT_LT(rel(mxsum::algebraic_minus(P(0.0, 1.0, a), 8).value, e / (e + 1.0)), 1e-15) << a;
  }
}

TEST(AlgebraicMinus, ErrorEstimateAndDivergenceDiagnostics) {
  const auto big = mxsum::algebraic_minus(P(0.5, 1.0, 10.0), 4);
  EXPECT_GT(big.error_estimate, 0.0);
  EXPECT_EQ(big.first_increasing_term, -1);
  const auto small = mxsum::algebraic_minus(P(0.5, 1.0, 1.0), 20);
  EXPECT_GE(small.first_increasing_term, 1);
}

TEST(AlgebraicMinus, ErrorDecreasesWithA) {
  for (int k : {1, 2, 4, 6, 8}) {
    double previous = 1.0;
    for (double a : {6.0, 8.0, 10.0}) {
      const auto p = P(0.5, 1.0, a);
      const double err = rel(mxsum::algebraic_minus(p, k).value, mxsum::direct_sum(p).value);
      EXPECT_LT(err, previous) << "k=" << k << " a=" << a;
      previous = err;
    }
  }
}

TEST(AlgebraicPlus, ReferenceErrors) {
  for (auto [a, want] : std::vector<std::pair<double, double>>{{10.0, 9.129e-6}, {20.0, 3.817e-9}}) {
    const auto p = P(0.25, 1.0, a, Sign::plus);
    EXPECT_NEAR(rel(mxsum::algebraic_plus(p, 5).value, mxsum::direct_sum(p).value) / want, 1.0, 0.02) << a;
  }
  const auto p = P(0.25, 1.0, 10.0, Sign::plus);
  EXPECT_NEAR(rel(mxsum::algebraic_plus(p, 0).value, mxsum::direct_sum(p).value) / 2.959e-3, 1.0, 0.02);
}

TEST(AlgebraicPlus, MuZeroIdentity) {
  const double lambda = 0.7;
  const double e = std::exp(lambda);
  EXPECT_LT(rel(mxsum::algebraic_plus(P(0.0, lambda, 5.0, Sign::plus), 6).value, e / (e - 1.0)), 1e-14);
}

TEST(Algebraic, RequirePositiveLambda) {
  EXPECT_THROW(mxsum::algebraic_minus(P(0.5, 0.0, 5.0), 3), mxsum::precondition_error);
  EXPECT_THROW(mxsum::algebraic_plus(P(0.5, 0.0, 5.0, Sign::plus), 3), mxsum::precondition_error);
}

// ---- Bessel tails ----

TEST(TailMinus, ReferenceAgreementValue) {
  const auto t = mxsum::bessel_tail_minus(P(0.5, 1.0, 3.0));
  EXPECT_LT(rel(t.evaluation.value, -6.3578382469545e-5), 1e-11);
  EXPECT_LT(t.evaluation.tail_terms_used, 10);
}

TEST(TailMinus, ReducesToOlverAtLambdaZero) {
  const double mu = 0.5, a = 5.0;
  const auto t = mxsum::bessel_tail_minus(P(mu, 0.0, a));
  double olver = 0.0;
  for (const auto& term : t.terms) {
    EXPECT_LE(std::abs(term.theta), 1e-13);
    const complex X = (2.0 * term.k + 1.0) * pi * a;
    EXPECT_LT(std::abs(term.magnitude - std::abs(mxsum::kv_complex(0.5 - mu, X) / std::pow(X, 0.5 - mu))),
              1e-15 * term.magnitude);
    olver += term.magnitude;
  }
  olver *= std::pow(2.0, 1.5 - mu) * std::sqrt(pi) * std::pow(a, 1.0 - 2.0 * mu) / std::tgamma(mu);
  EXPECT_LT(rel(t.evaluation.value, olver), 1e-13);
}

TEST(TailMinus, ClosesIdentityAtQuarter) {
  const auto p = P(0.25, 1.0, 6.0);
  const complex s = mxsum::direct_sum(p, 1e-17).value;
  const complex sub = s - leading(p) - mxsum::h_minus_quadrature(p, 1e-16).value;
  // The tail is ~1e-9 of S, so agreement is judged on the scale of S.
  EXPECT_LT(std::abs(mxsum::bessel_tail_minus(p).evaluation.value - sub), 1e-12 * std::abs(s));
}

TEST(TailForms, ReflectionAndDisplayFormsAgree) {
  for (double mu : {0.1, 0.25, 0.75, 0.9}) {
    for (auto sign : {Sign::minus, Sign::plus}) {
      const auto p = P(mu, 1.0, 3.0, sign);
      const auto t = sign == Sign::minus ? mxsum::bessel_tail_minus(p) : mxsum::bessel_tail_plus(p);
      EXPECT_LT(rel(t.display_value, t.evaluation.value), 1e-12) << "mu=" << mu;
    }
  }
}

TEST(TailTerms, Invariants) {
  const auto t = mxsum::bessel_tail_minus(P(0.3, 1.2, complex(4.0, 1.0)));
  EXPECT_TRUE(std::isnan(t.display_value));
  for (const auto& term : t.terms) {
    EXPECT_GT(term.X.real(), 0.0);
    EXPECT_GT(term.theta, -pi);
    EXPECT_LE(term.theta, pi);
    EXPECT_LT(std::abs(term.magnitude - std::abs(term.kv / std::pow(term.X, 0.5 - 0.3))), 1e-14 * term.magnitude);
  }
}

TEST(TailMinus, RejectsIntegerMuAndSectorViolation) {
  EXPECT_THROW(mxsum::bessel_tail_minus(P(1.0, 1.0, 3.0)), mxsum::precondition_error);
  EXPECT_THROW(mxsum::bessel_tail_minus(P(0.0, 1.0, 3.0)), mxsum::precondition_error);
  EXPECT_THROW(mxsum::bessel_tail_minus(P(0.5, 1.0, std::polar(2.0, 1.4))), mxsum::domain_error);
  EXPECT_THROW(mxsum::bessel_tail_plus(P(0.5, 4.0, std::polar(2.0, -1.3), Sign::plus)), mxsum::domain_error);
}

TEST(TailPlus, LambdaZeroMatchesClosedDisplay) {
  const double mu = 0.75, a = 4.0;
  const auto t = mxsum::bessel_tail_plus(P(mu, 0.0, a, Sign::plus));
  double want = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double X = (2.0 * k + 2.0) * pi * a;
    want += (mxsum::kv_complex(0.5 - mu, X) / std::pow(X, 0.5 - mu)).real();
  }
  want *= std::pow(2.0, 1.5 - mu) * std::sqrt(pi) * std::pow(a, 1.0 - 2.0 * mu) / std::tgamma(mu);
  EXPECT_LT(rel(t.evaluation.value, want), 1e-13);
}

TEST(TailPlus, ClosesIdentity) {
  const auto p = P(0.25, 1.0, 10.0, Sign::plus);
  const complex s = mxsum::direct_sum(p, 1e-17).value;
  const complex sub = s - leading(p) - mxsum::h_plus_quadrature(p, 1e-16).value - mxsum::j_mu_quadrature(p, 1e-16).value;
  EXPECT_LT(std::abs(mxsum::bessel_tail_plus(p).evaluation.value - sub), 1e-12 * std::abs(s));
}

// ---- full representations ----

TEST(FullRepresentations, OracleClosureGrid) {
  for (double mu : {0.25, 0.5, 0.75}) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      for (double a : {2.0, 3.0, 6.0}) {
        const auto m = P(mu, lambda, a);
        EXPECT_LT(rel(mxsum::full_minus(m).value, mxsum::direct_sum(m).value), 1e-10)
            << "minus mu=" << mu << " lambda=" << lambda << " a=" << a;
        const auto p = P(mu, lambda, a, Sign::plus);
        EXPECT_LT(rel(mxsum::full_plus(p).value, mxsum::direct_sum(p).value), 1e-10)
            << "plus mu=" << mu << " lambda=" << lambda << " a=" << a;
      }
    }
  }
}

TEST(FullRepresentations, ReferenceValues) {
  EXPECT_NEAR(mxsum::full_minus(P(0.5, 1.0, 6.0)).value.real(), 0.122060, 5e-7);
  EXPECT_NEAR(mxsum::full_plus(P(0.25, 1.0, 15.0, Sign::plus)).value.real(), 0.407911, 5e-7);
}

TEST(FullRepresentations, LambdaZeroReducesToOlver) {
  EXPECT_LT(rel(mxsum::full_minus(P(0.75, 0.0, 5.0)).value, mxsum::olver_lambda0_minus(0.75, 5.0).value), 1e-15);
}

TEST(FullRepresentations, ComplexArgumentClosure) {
  for (complex a : {complex(2.0, 1.0), complex(3.0, -2.0), complex(1.5, 2.0)}) {
    const auto m = P(0.5, 1.0, a);
    EXPECT_LT(rel(mxsum::full_minus(m).value, mxsum::direct_sum(m).value), 1e-10) << a;
    const auto p = P(0.25, 1.0, a, Sign::plus);
    EXPECT_LT(rel(mxsum::full_plus(p).value, mxsum::direct_sum(p).value), 1e-10) << a;
  }
}

TEST(FullRepresentations, Preconditions) {
  EXPECT_THROW(mxsum::full_plus(P(0.0, 1.0, 3.0, Sign::plus)), mxsum::precondition_error);
  EXPECT_THROW(mxsum::full_minus(P(1.5, 1.0, 3.0)), mxsum::precondition_error);
  EXPECT_THROW(mxsum::full_plus(P(0.5, 0.0, 3.0, Sign::plus)), mxsum::precondition_error);
}

// ---- lambda = 0 closed forms ----

TEST(Lambda0, OlverPartialFractions) {
  EXPECT_LT(rel(mxsum::olver_lambda0_minus(1.0, 1.0).value, 0.5 * (1.0 + pi / std::sinh(pi))), 1e-12);
}

TEST(Lambda0, OlverMatchesAcceleratedOracle) {
  EXPECT_LT(rel(mxsum::olver_lambda0_minus(0.5, 5.0).value, mxsum::direct_sum(P(0.5, 0.0, 5.0)).value), 1e-12);
  EXPECT_LT(rel(mxsum::olver_lambda0_minus(0.75, 5.0).value, mxsum::direct_sum(P(0.75, 0.0, 5.0)).value), 1e-10);
}

TEST(Lambda0, OlverTailIsExponentiallySmall) {
  const double a = 8.0;
  const auto e = mxsum::olver_lambda0_minus(0.75, a);
  EXPECT_LT(std::abs(e.value - 0.5 * std::pow(a, -1.5)), std::exp(-pi * a));
}

TEST(Lambda0, PlainPartialFractions) {
  EXPECT_LT(rel(mxsum::lambda0_plus(1.0, 1.0).value, 0.5 * (1.0 + pi / std::tanh(pi))), 1e-12);
  const double a = 2.0;
  EXPECT_LT(rel(mxsum::lambda0_plus(1.0, a).value, pi / std::tanh(pi * a) / (2.0 * a) + 0.5 / (a * a)), 1e-12);
}

TEST(Lambda0, PlainMatchesOracle) {
  EXPECT_LT(rel(mxsum::lambda0_plus(0.75, 3.0).value, mxsum::direct_sum(P(0.75, 0.0, 3.0, Sign::plus)).value), 1e-10);
  EXPECT_LT(rel(mxsum::lambda0_plus(0.75, 5.0).value, mxsum::direct_sum(P(0.75, 0.0, 5.0, Sign::plus)).value), 1e-10);
}

TEST(Lambda0, PlainRejectsDivergentExponent) {
  EXPECT_THROW(mxsum::lambda0_plus(0.5, 2.0), mxsum::domain_error);
}

// ---- integer mu ----

TEST(IntegerMu, MatchesOracle) {
  for (int n = 1; n <= 5; ++n) {
    for (double a : {2.0, 3.0}) {
      for (auto sign : {Sign::minus, Sign::plus}) {
        const auto p = P(n, 1.0, a, sign);
        EXPECT_LT(rel(mxsum::integer_mu_closed_form(n, p).value, mxsum::direct_sum(p).value), 1e-12)
            << "n=" << n << " a=" << a;
      }
    }
  }
}

TEST(IntegerMu, ZeroIsGeometric) {
  const double e = std::exp(1.0);
  EXPECT_LT(rel(mxsum::integer_mu_closed_form(0, P(0.0, 1.0, 2.0)).value, e / (e + 1.0)), 1e-15);
  EXPECT_LT(rel(mxsum::integer_mu_closed_form(0, P(0.0, 1.0, 2.0, Sign::plus)).value, e / (e - 1.0)), 1e-15);
}

TEST(IntegerMu, ComplexArgument) {
  const auto p = P(3.0, 0.5, complex(2.0, 1.5), Sign::plus);
  EXPECT_LT(rel(mxsum::integer_mu_closed_form(3, p).value, mxsum::direct_sum(p).value), 1e-12);
}

TEST(IntegerMu, RejectsOutOfRange) {
  EXPECT_THROW(mxsum::integer_mu_closed_form(6, P(6.0, 1.0, 2.0)), mxsum::precondition_error);
  EXPECT_THROW(mxsum::integer_mu_closed_form(2, P(2.0, 0.0, 2.0)), mxsum::precondition_error);
}

// ---- mu step ----

TEST(MuStep, CentralDifferenceMatchesNextExponent) {
  EXPECT_LE(mxsum::mu_step_check(P(0.5, 1.0, 4.0), 1e-4), 1e-7);
  EXPECT_LE(mxsum::mu_step_check(P(0.25, 2.0, 6.0), 1e-4), 1e-7);
}

TEST(MuStep, SecondOrderConvergence) {
  const auto p = P(0.5, 1.0, 4.0);
  const double ratio = mxsum::mu_step_check(p, 1e-4) / mxsum::mu_step_check(p, 5e-5);
  EXPECT_GT(ratio, 3.5);
  EXPECT_LT(ratio, 4.5);
}

// ---- cross-cutting invariants ----

TEST(Invariants, RealArgumentGivesRealValues) {
  const auto m = P(0.4, 0.8, 4.0);
  const auto p = P(0.4, 0.8, 4.0, Sign::plus);
  const std::vector<Evaluation> all{mxsum::direct_sum(m),        mxsum::full_minus(m),         mxsum::full_plus(p),
                                    mxsum::algebraic_minus(m, 4), mxsum::algebraic_plus(p, 4), mxsum::h_minus_quadrature(m),
                                    mxsum::h_plus_quadrature(p),  mxsum::j_mu_quadrature(p),    mxsum::j_mu_asymptotic(p, 3),
                                    mxsum::bessel_tail_minus(m).evaluation, mxsum::bessel_tail_plus(p).evaluation,
                                    mxsum::small_a_minus(P(0.4, 0.8, 0.7), 40)};
  for (const auto& e : all) {
    EXPECT_LE(std::abs(e.value.imag()), 1e-13 * std::abs(e.value)) << mxsum::to_string(e.method);
    EXPECT_GE(e.error_estimate, 0.0) << mxsum::to_string(e.method);
  }
}

TEST(Invariants, ConjugateSymmetry) {
  for (double arg : {0.2 * pi, 0.3 * pi, 0.4 * pi}) {
    const complex a = std::polar(4.0, arg);
    const auto check = [&](const std::function<complex(complex)>& f, const char* name) {
      const complex up = f(a);
      const complex down = f(std::conj(a));
      EXPECT_LT(std::abs(down - std::conj(up)), 1e-12 * std::abs(up)) << name << " arg=" << arg;
    };
    const double lambda = 0.5;
    check([&](complex z) { return mxsum::direct_sum(P(0.5, lambda, z)).value; }, "direct_sum");
    check([&](complex z) { return mxsum::algebraic_minus(P(0.5, lambda, z), 6).value; }, "algebraic_minus");
    check([&](complex z) { return mxsum::algebraic_plus(P(0.5, lambda, z, Sign::plus), 6).value; }, "algebraic_plus");
    check([&](complex z) { return mxsum::h_minus_quadrature(P(0.5, lambda, z)).value; }, "h_minus");
    check([&](complex z) { return mxsum::h_plus_quadrature(P(0.5, lambda, z, Sign::plus)).value; }, "h_plus");
    check([&](complex z) { return mxsum::j_mu_quadrature(P(0.5, lambda, z)).value; }, "j_mu");
    check([&](complex z) { return mxsum::full_minus(P(0.5, lambda, z)).value; }, "full_minus");
    check([&](complex z) { return mxsum::full_plus(P(0.5, lambda, z, Sign::plus)).value; }, "full_plus");
    check([&](complex z) { return mxsum::olver_lambda0_minus(0.5, z).value; }, "olver");
    check([&](complex z) { return mxsum::integer_mu_closed_form(2, P(2.0, lambda, z)).value; }, "integer_mu");
  }
}
