#pragma once

#include <mpfr.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "rpm/rational.hpp"

namespace rpm {

/// Arbitrary-precision binary float (MPFR) that carries its own working
/// precision, stated in decimal digits. Arithmetic between two values is
/// carried out at the larger of the two precisions.
class BigReal {
 public:
  static constexpr int kDefaultDigits = 16;

  BigReal() : BigReal(0L, kDefaultDigits) {}
  BigReal(long value, int digits);
  BigReal(const Rational& value, int digits);
  explicit BigReal(double value, int digits = kDefaultDigits);

  /// Parses a decimal string ("-0.69852", "1.2e-5", "3/2").
  static BigReal parse(std::string_view text, int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int digits() const { return digits_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(x_); }
  /// Same value at a new working precision.
  BigReal with_digits(int digits) const;

  static mpfr_prec_t bits_for_digits(int digits);

  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  /// Exact conversion of the binary value.
  Rational to_rational() const;
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; nullopt for zero.
  std::optional<long> exponent2() const;

  /// Shortest-style decimal with `sig_digits` significant digits (defaults
  /// to the working precision).
  std::string to_string(int sig_digits = 0) const;
  /// Decimal with exactly `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(const Rational& q);
  BigReal& operator/=(const Rational& q);
  BigReal& operator+=(const Rational& q);
  BigReal& operator-=(const Rational& q);

  friend BigReal operator+(BigReal a, const BigReal& b) { a += b; return a; }
  friend BigReal operator-(BigReal a, const BigReal& b) { a -= b; return a; }
  friend BigReal operator*(BigReal a, const BigReal& b) { a *= b; return a; }
  friend BigReal operator/(BigReal a, const BigReal& b) { a /= b; return a; }
  friend BigReal operator*(BigReal a, const Rational& q) { a *= q; return a; }
  friend BigReal operator/(BigReal a, const Rational& q) { a /= q; return a; }
  friend BigReal operator+(BigReal a, const Rational& q) { a += q; return a; }
  friend BigReal operator-(BigReal a, const Rational& q) { a -= q; return a; }
  friend BigReal operator-(const BigReal& a);

  /// this -= a * b, fused into a single rounding.
  void sub_mul(const BigReal& a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  struct Uninit {};
  BigReal(Uninit, int digits);
  void ensure_at_least(const BigReal& o);

  mpfr_t x_;
  int digits_ = kDefaultDigits;
  bool live_ = false;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
BigReal euler_e(int digits);

/// |a - b| <= ulps units in the last place of the larger operand, at the
/// lower of the two precisions.
bool approx_equal(const BigReal& a, const BigReal& b, int ulps = 10);
/// |a - b| <= tol.
bool approx_equal(const BigReal& a, const BigReal& b, const BigReal& tol);

/// 10^exponent at the requested working precision.
BigReal pow10(long exponent, int digits);

std::ostream& operator<<(std::ostream& os, const BigReal& x);

}  // namespace rpm
