#pragma once

#include <ostream>
#include <utility>

#include "rpm/errors.hpp"
#include "rpm/rational.hpp"

namespace rpm {

/// First-order dual number (value, d value / d x). Seeding the unknown as
/// (x, 1) and every constant as (c, 0) makes `deriv` the exact derivative of
/// any rational-arithmetic pipeline.
template <class T>
struct Dual {
  T value;
  T deriv;

  Dual() = default;
  Dual(T v, T d) : value(std::move(v)), deriv(std::move(d)) {}

  static Dual variable(const T& x) { return Dual(x, T(1L, x.digits())); }
  static Dual constant(const T& c) { return Dual(c, T(0L, c.digits())); }

  int digits() const { return value.digits(); }

  Dual& operator+=(const Dual& o) {
    value += o.value;
    deriv += o.deriv;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    value -= o.value;
    deriv -= o.deriv;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    // (a, a')(b, b') = (ab, a'b + ab')
    deriv *= o.value;
    T t = value * o.deriv;
    deriv += t;
    value *= o.value;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    if (o.value.is_zero()) throw DivisionByZero("dual division by zero value");
    // (a/b, (a'b - ab') / b^2) written as (q, (a' - q b') / b)
    value /= o.value;
    T t = value * o.deriv;
    deriv -= t;
    deriv /= o.value;
    return *this;
  }
  Dual& operator*=(const Rational& q) {
    value *= q;
    deriv *= q;
    return *this;
  }
  Dual& operator/=(const Rational& q) {
    value /= q;
    deriv /= q;
    return *this;
  }
  Dual& operator+=(const Rational& q) {
    value += q;
    return *this;
  }
  Dual& operator-=(const Rational& q) {
    value -= q;
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { a += b; return a; }
  friend Dual operator-(Dual a, const Dual& b) { a -= b; return a; }
  friend Dual operator*(Dual a, const Dual& b) { a *= b; return a; }
  friend Dual operator/(Dual a, const Dual& b) { a /= b; return a; }
  friend Dual operator*(Dual a, const Rational& q) { a *= q; return a; }
  friend Dual operator/(Dual a, const Rational& q) { a /= q; return a; }
  friend Dual operator+(Dual a, const Rational& q) { a += q; return a; }
  friend Dual operator-(Dual a, const Rational& q) { a -= q; return a; }
  friend Dual operator-(const Dual& a) { return Dual(-a.value, -a.deriv); }

  friend bool operator==(const Dual& a, const Dual& b) { return a.value == b.value && a.deriv == b.deriv; }

  friend std::ostream& operator<<(std::ostream& os, const Dual& x) {
    return os << "(" << x.value << ", " << x.deriv << ")";
  }
};

}  // namespace rpm
