#include "rpm/xi_series.hpp"

#include <algorithm>

#include "rpm/errors.hpp"

namespace rpm {

XiSeries::XiSeries(int order) {
  if (order < 0) throw InvalidArgument("negative truncation order");
  c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

XiSeries::XiSeries(Rational constant, int order) : XiSeries(order) { c_[0] = std::move(constant); }

XiSeries::XiSeries(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)) {
  if (order < 0) throw InvalidArgument("negative truncation order");
  c_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

XiSeries XiSeries::shifted(const Rational& c, int order) {
  XiSeries s(c, order);
  if (order >= 1) s.c_[1] = Rational(1);
  return s;
}

bool XiSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<int> XiSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<int>(k);
  return std::nullopt;
}

XiSeries XiSeries::shift_down(int v) const {
  XiSeries r(order());
  for (int k = v; k <= order(); ++k) r.c_[static_cast<std::size_t>(k - v)] = c_[static_cast<std::size_t>(k)];
  return r;
}

Rational XiSeries::evaluate(const Rational& xi) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xi + *it;
  return acc;
}

void XiSeries::check_order(const XiSeries& o) const {
  if (o.order() != order()) throw InvalidArgument("xi-series truncation orders differ");
}

XiSeries& XiSeries::operator+=(const XiSeries& o) {
  check_order(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

XiSeries& XiSeries::operator-=(const XiSeries& o) {
  check_order(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

XiSeries operator*(const XiSeries& a, const XiSeries& b) {
  a.check_order(b);
  const int n = a.order();
  XiSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

XiSeries& XiSeries::operator*=(const XiSeries& o) { return *this = *this * o; }

XiSeries& XiSeries::operator/=(const XiSeries& o) {
  check_order(o);
  if (o.c_[0].is_zero()) throw DivisionByZero("xi-series divisor has zero constant term");
  const int n = order();
  std::vector<Rational> q(c_.size());
  const Rational inv = Rational(1) / o.c_[0];
  for (int k = 0; k <= n; ++k) {
    Rational acc = c_[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j)
      if (!o[j].is_zero()) acc -= o[j] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc * inv;
  }
  c_ = std::move(q);
  return *this;
}

XiSeries& XiSeries::operator*=(const Rational& q) {
  for (auto& x : c_) x *= q;
  return *this;
}

XiSeries& XiSeries::operator/=(const Rational& q) {
  if (q.is_zero()) throw DivisionByZero();
  for (auto& x : c_) x /= q;
  return *this;
}

XiSeries& XiSeries::operator+=(const Rational& q) {
  c_[0] += q;
  return *this;
}

XiSeries& XiSeries::operator-=(const Rational& q) {
  c_[0] -= q;
  return *this;
}

XiSeries operator-(const XiSeries& a) {
  XiSeries r(a);
  for (auto& x : r.c_) x = -x;
  return r;
}

std::ostream& operator<<(std::ostream& os, const XiSeries& s) {
  os << "[";
  for (int k = 0; k <= s.order(); ++k) os << (k ? ", " : "") << s[k];
  return os << "]";
}

}  // namespace rpm
