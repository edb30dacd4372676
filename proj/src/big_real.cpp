#include "rpm/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rpm/errors.hpp"

namespace rpm {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;
constexpr mpfr_prec_t kGuardBits = 8;

struct MpfrString {
  char* p = nullptr;
  ~MpfrString() {
    if (p) mpfr_free_str(p);
  }
};

}  // namespace

mpfr_prec_t BigReal::bits_for_digits(int digits) {
  if (digits < 1) throw InvalidArgument("working precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + kGuardBits;
}

BigReal::BigReal(Uninit, int digits) : digits_(digits), live_(true) {
  mpfr_init2(x_, bits_for_digits(digits));
}

BigReal::BigReal(long value, int digits) : BigReal(Uninit{}, digits) {
  mpfr_set_si(x_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, int digits) : BigReal(Uninit{}, digits) {
  mpfr_set_q(x_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(double value, int digits) : BigReal(Uninit{}, digits) {
  mpfr_set_d(x_, value, MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, int digits) {
  std::string s(text);
  if (s.find('/') != std::string::npos) return BigReal(Rational::parse(s), digits);
  BigReal r(Uninit{}, digits);
  char* end = nullptr;
  if (mpfr_strtofr(r.x_, s.c_str(), &end, 10, MPFR_RNDN), end == s.c_str() || *end != '\0')
    throw ParseError("bad decimal '" + s + "'");
  return r;
}

BigReal::BigReal(const BigReal& other) : BigReal(Uninit{}, other.digits_) {
  if (!other.live_) {
    mpfr_set_zero(x_, 1);
    return;
  }
  mpfr_set_prec(x_, other.bits());
  mpfr_set(x_, other.x_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_), live_(other.live_) {
  if (live_) {
    // mpfr_t is a one-element array holding a pointer; copying the struct
    // transfers ownership of the limbs.
    x_[0] = other.x_[0];
    other.live_ = false;
  }
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this == &other) return *this;
  if (!live_) {
    mpfr_init2(x_, other.bits());
    live_ = true;
  } else if (bits() != other.bits()) {
    mpfr_set_prec(x_, other.bits());
  }
  digits_ = other.digits_;
  mpfr_set(x_, other.x_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this == &other) return *this;
  if (live_) mpfr_clear(x_);
  live_ = other.live_;
  digits_ = other.digits_;
  if (live_) {
    x_[0] = other.x_[0];
    other.live_ = false;
  }
  return *this;
}

BigReal::~BigReal() {
  if (live_) mpfr_clear(x_);
}

BigReal BigReal::with_digits(int digits) const {
  BigReal r(Uninit{}, digits);
  mpfr_set(r.x_, x_, MPFR_RNDN);
  return r;
}

Rational BigReal::to_rational() const {
  if (!is_finite()) throw InvalidArgument("non-finite value has no rational form");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x_);
  return Rational(q);
}

std::optional<long> BigReal::exponent2() const {
  if (is_zero() || !is_finite()) return std::nullopt;
  return static_cast<long>(mpfr_get_exp(x_));
}

std::string BigReal::to_string(int sig_digits) const {
  const int n = sig_digits > 0 ? sig_digits : digits_;
  MpfrString s;
  mpfr_asprintf(&s.p, "%.*RNg", n, x_);
  return s.p;
}

std::string BigReal::to_fixed(int decimals) const {
  MpfrString s;
  mpfr_asprintf(&s.p, "%.*RNf", std::max(decimals, 0), x_);
  return s.p;
}

void BigReal::ensure_at_least(const BigReal& o) {
  if (o.bits() > bits()) {
    mpfr_prec_round(x_, o.bits(), MPFR_RNDN);
    digits_ = o.digits_;
  }
}

BigReal& BigReal::operator+=(const BigReal& o) {
  ensure_at_least(o);
  mpfr_add(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  ensure_at_least(o);
  mpfr_sub(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  ensure_at_least(o);
  mpfr_mul(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.is_zero()) throw DivisionByZero();
  ensure_at_least(o);
  mpfr_div(x_, x_, o.x_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const Rational& q) {
  mpfr_mul_q(x_, x_, q.raw().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const Rational& q) {
  if (q.is_zero()) throw DivisionByZero();
  mpfr_div_q(x_, x_, q.raw().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator+=(const Rational& q) {
  mpfr_add_q(x_, x_, q.raw().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const Rational& q) {
  mpfr_sub_q(x_, x_, q.raw().get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a);
  mpfr_neg(r.x_, r.x_, MPFR_RNDN);
  return r;
}

void BigReal::sub_mul(const BigReal& a, const BigReal& b) {
  ensure_at_least(a);
  ensure_at_least(b);
  mpfr_fms(x_, a.x_, b.x_, x_, MPFR_RNDN);
  mpfr_neg(x_, x_, MPFR_RNDN);
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.x_, b.x_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.x_, b.x_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) { return x.sign() < 0 ? -x : x; }

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw InvalidArgument("sqrt of negative value");
  BigReal r(x);
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal exp(const BigReal& x) {
  BigReal r(x);
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw InvalidArgument("log of non-positive value");
  BigReal r(x);
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw InvalidArgument("log10 of non-positive value");
  BigReal r(x);
  mpfr_log10(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal cosh(const BigReal& x) {
  BigReal r(x);
  mpfr_cosh(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal r = base.bits() >= exponent.bits() ? base : exponent;
  mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal r(base);
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

BigReal euler_e(int digits) { return exp(BigReal(1L, digits)); }

BigReal pow10(long exponent, int digits) {
  BigReal r(10L, digits);
  mpfr_pow_si(r.raw(), r.raw(), exponent, MPFR_RNDN);
  return r;
}

bool approx_equal(const BigReal& a, const BigReal& b, int ulps) {
  if (a == b) return true;
  const mpfr_prec_t p = std::min(a.bits(), b.bits());
  const BigReal scale = std::max(abs(a), abs(b));
  auto e = scale.exponent2();
  if (!e) return true;
  // one ulp of a p-bit number with exponent e is 2^(e - p)
  BigReal tol(static_cast<long>(ulps), std::max(a.digits(), b.digits()));
  mpfr_mul_2si(tol.raw(), tol.raw(), *e - p, MPFR_RNDN);
  return abs(a - b) <= tol;
}

bool approx_equal(const BigReal& a, const BigReal& b, const BigReal& tol) { return abs(a - b) <= tol; }

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(); }

}  // namespace rpm
