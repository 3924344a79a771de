#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <utility>

namespace mxsum {

/// Owning MPFR value with a fixed, explicit precision (in bits).
///
/// Every result is rounded to the precision of the left-hand operand, so no
/// process-wide default precision is ever consulted or modified.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); mpfr_set_zero(value_, 1); }
  BigFloat(mpfr_prec_t bits, double x) : BigFloat(bits) { mpfr_set_d(value_, x, MPFR_RNDN); }
  BigFloat(mpfr_prec_t bits, const mpz_class& z) : BigFloat(bits) { mpfr_set_z(value_, z.get_mpz_t(), MPFR_RNDN); }
  BigFloat(mpfr_prec_t bits, const mpq_class& q) : BigFloat(bits) { mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN); }

  BigFloat(const BigFloat& other) : BigFloat(mpfr_get_prec(other.value_)) { mpfr_set(value_, other.value_, MPFR_RNDN); }
  BigFloat(BigFloat&& other) noexcept : BigFloat(mpfr_get_prec(other.value_)) { mpfr_swap(value_, other.value_); }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(value_, value_, o.value_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(value_, value_, o.value_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(value_, value_, o.value_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(value_, value_, o.value_, MPFR_RNDN); return *this; }
  BigFloat& operator+=(const mpz_class& z) { mpfr_add_z(value_, value_, z.get_mpz_t(), MPFR_RNDN); return *this; }
  BigFloat& operator-=(const mpz_class& z) { mpfr_sub_z(value_, value_, z.get_mpz_t(), MPFR_RNDN); return *this; }
  BigFloat& operator+=(const mpq_class& q) { mpfr_add_q(value_, value_, q.get_mpq_t(), MPFR_RNDN); return *this; }
  BigFloat& operator*=(const mpq_class& q) { mpfr_mul_q(value_, value_, q.get_mpq_t(), MPFR_RNDN); return *this; }

  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }

  void mul_2si(long e) { mpfr_mul_2si(value_, value_, e, MPFR_RNDN); }
  void neg() { mpfr_neg(value_, value_, MPFR_RNDN); }

  friend BigFloat tanh(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_tanh(r.value_, x.value_, MPFR_RNDN);
    return r;
  }
  friend BigFloat coth(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_coth(r.value_, x.value_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow(const BigFloat& x, long n) {
    BigFloat r(x.precision());
    mpfr_pow_si(r.value_, x.value_, n, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t value_;
};

/// Bits needed for `digits` decimal digits.
inline mpfr_prec_t bits_for_digits(double digits) {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits, 20.0) * 3.3219280948873623)) + 16;
}

/// log10 |z| for a big integer without overflow.
inline double log10_abs(const mpz_class& z) {
  if (z == 0) return -1e300;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log10(std::abs(mant)) + static_cast<double>(exp) * 0.30102999566398120;
}

}  // namespace mxsum
