#pragma once

// The four coefficient rings share one arithmetic surface: +, -, *, / among
// themselves plus scaling by exact Rationals. `lift` embeds an exact constant
// into the ring (and precision, or truncation order) of a sample element.

#include "rpm/big_real.hpp"
#include "rpm/dual.hpp"
#include "rpm/rational.hpp"
#include "rpm/xi_series.hpp"

namespace rpm {

using DualReal = Dual<BigReal>;

inline Rational lift(const Rational& q, const Rational&) { return q; }
inline BigReal lift(const Rational& q, const BigReal& like) { return BigReal(q, like.digits()); }
inline DualReal lift(const Rational& q, const DualReal& like) {
  return DualReal(BigReal(q, like.digits()), BigReal(0L, like.digits()));
}
inline XiSeries lift(const Rational& q, const XiSeries& like) { return XiSeries(q, like.order()); }

/// True when dividing by x would fail.
inline bool is_zero_divisor(const Rational& x) { return x.is_zero(); }
inline bool is_zero_divisor(const BigReal& x) { return x.is_zero(); }
inline bool is_zero_divisor(const DualReal& x) { return x.value.is_zero(); }
inline bool is_zero_divisor(const XiSeries& x) { return x[0].is_zero(); }

/// Default working precision for a dimension-D Hankel computation.
constexpr int auto_digits(int dimension) { return 30 + 5 * dimension; }

}  // namespace rpm
