#include "rpm/rational.hpp"

#include <cctype>

#include "rpm/errors.hpp"

namespace rpm {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  q_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty integer in '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer in '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError("bad number '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return Rational(parse_integer(s.substr(0, slash), text), parse_integer(s.substr(slash + 1), text));
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(s.substr(e + 1), text).get_si();
    s = s.substr(0, e);
  }
  std::string mantissa(s);
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  mpz_class num = parse_integer(mantissa, text);
  if (exponent >= 0) return Rational(mpz_class(num * pow10(static_cast<unsigned long>(exponent))));
  return Rational(num, pow10(static_cast<unsigned long>(-exponent)));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw DivisionByZero();
    return Rational(1) / pow(base, -exponent);
  }
  Rational result(1);
  Rational b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e; e >>= 1) {
    if (e & 1u) result *= b;
    if (e > 1) b *= b;
  }
  return result;
}

Rational factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Rational binomial(const Rational& top, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) {
    r *= top - Rational(static_cast<long>(i));
    r /= Rational(static_cast<long>(i + 1));
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace rpm
