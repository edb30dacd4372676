#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "rpm/rational.hpp"

namespace rpm {

/// Truncated power series c_0 + c_1 xi + ... + c_K xi^K with exact rational
/// coefficients. Terms of order above K are discarded by every operation.
class XiSeries {
 public:
  XiSeries() : XiSeries(0) {}
  explicit XiSeries(int order);
  XiSeries(Rational constant, int order);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  XiSeries(std::vector<Rational> coeffs, int order);

  /// c + xi, the usual substitution for a shifted parameter.
  static XiSeries shifted(const Rational& c, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  /// Lowest index with a nonzero coefficient; nullopt for the zero series.
  std::optional<int> valuation() const;
  /// Divides by xi^v (v <= valuation); the top v coefficients become zero.
  XiSeries shift_down(int v) const;
  Rational evaluate(const Rational& xi) const;

  XiSeries& operator+=(const XiSeries& o);
  XiSeries& operator-=(const XiSeries& o);
  XiSeries& operator*=(const XiSeries& o);
  /// Requires a nonzero constant term in the divisor.
  XiSeries& operator/=(const XiSeries& o);
  XiSeries& operator*=(const Rational& q);
  XiSeries& operator/=(const Rational& q);
  XiSeries& operator+=(const Rational& q);
  XiSeries& operator-=(const Rational& q);

  friend XiSeries operator+(XiSeries a, const XiSeries& b) { a += b; return a; }
  friend XiSeries operator-(XiSeries a, const XiSeries& b) { a -= b; return a; }
  friend XiSeries operator*(const XiSeries& a, const XiSeries& b);
  friend XiSeries operator/(XiSeries a, const XiSeries& b) { a /= b; return a; }
  friend XiSeries operator*(XiSeries a, const Rational& q) { a *= q; return a; }
  friend XiSeries operator/(XiSeries a, const Rational& q) { a /= q; return a; }
  friend XiSeries operator+(XiSeries a, const Rational& q) { a += q; return a; }
  friend XiSeries operator-(XiSeries a, const Rational& q) { a -= q; return a; }
  friend XiSeries operator-(const XiSeries& a);

  friend bool operator==(const XiSeries& a, const XiSeries& b) { return a.c_ == b.c_; }

 private:
  void check_order(const XiSeries& o) const;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const XiSeries& s);

}  // namespace rpm
