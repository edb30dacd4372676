#include "rpm/hankel.hpp"

#include <sstream>

namespace rpm {

BigReal determinant(SquareMatrix<BigReal> m) {
  const int n = m.size();
  int digits = BigReal::kDefaultDigits;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) digits = std::max(digits, m(i, j).digits());
  BigReal det(1L, digits);
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > abs(m(p, k))) p = i;
    if (m(p, k).is_zero()) return BigReal(0L, digits);
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    const BigReal& pivot = m(k, k);
    det *= pivot;
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const BigReal factor = m(i, k) / pivot;
      for (int j = k + 1; j < n; ++j) m(i, j).sub_mul(factor, m(k, j));
    }
  }
  return det;
}

DualReal determinant(SquareMatrix<DualReal> m) {
  const int n = m.size();
  int digits = BigReal::kDefaultDigits;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) digits = std::max(digits, m(i, j).digits());
  DualReal det(BigReal(1L, digits), BigReal(0L, digits));
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (abs(m(i, k).value) > abs(m(p, k).value)) p = i;
    if (m(p, k).value.is_zero()) {
      // det(A) = det * det(S) with S the trailing block, det(S) = 0 in value
      // and d det(S) = det of S's values with column k replaced by its
      // derivatives.
      SquareMatrix<BigReal> s(n - k);
      for (int i = k; i < n; ++i) {
        s(i - k, 0) = m(i, k).deriv;
        for (int j = k + 1; j < n; ++j) s(i - k, j - k) = m(i, j).value;
      }
      return DualReal(BigReal(0L, digits), det.value * determinant(std::move(s)));
    }
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    const DualReal& pivot = m(k, k);
    det *= pivot;
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k).value.is_zero() && m(i, k).deriv.is_zero()) continue;
      const DualReal factor = m(i, k) / pivot;
      for (int j = k + 1; j < n; ++j) {
        DualReal& a = m(i, j);
        const DualReal& b = m(k, j);
        a.deriv.sub_mul(factor.value, b.deriv);
        a.deriv.sub_mul(factor.deriv, b.value);
        a.value.sub_mul(factor.value, b.value);
      }
    }
  }
  return det;
}

Rational determinant(SquareMatrix<Rational> m) {
  const int n = m.size();
  SquareMatrix<mpz_class> b(n);
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      b(i, j) = m(i, j).numerator() * (lcm / m(i, j).denominator());
    }
    scale *= lcm;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (b(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (b(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Rational(0);
      b.swap_rows(p, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = b(i, j) * b(k, k) - b(i, k) * b(k, j);
        mpz_divexact(b(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      b(i, k) = 0;
    }
    prev = b(k, k);
  }
  mpz_class det = b(n - 1, n - 1);
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

XiSeries determinant(SquareMatrix<XiSeries> m) {
  const int n = m.size();
  const int order = m(0, 0).order();
  XiSeries det(Rational(1), order);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    int best = order + 1;
    for (int i = k; i < n; ++i) {
      auto v = m(i, k).valuation();
      if (v && *v < best) {
        best = *v;
        p = i;
      }
    }
    if (p < 0)
      throw OrderDeficiency("pivot column " + std::to_string(k) + " vanishes through order " +
                            std::to_string(order) + "; raise the truncation order");
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det *= m(k, k);
    // Every entry below the pivot has valuation >= best, so the quotient is
    // a series; dividing both by xi^best keeps the divisor invertible.
    const XiSeries unit = m(k, k).shift_down(best);
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const XiSeries factor = m(i, k).shift_down(best) / unit;
      for (int j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

std::string to_string(Unknown u) { return u == Unknown::energy ? "E" : "v0"; }

HankelProblem HankelProblem::with_dimension(int d) const {
  HankelProblem p = *this;
  p.dimension = d;
  return p;
}

HankelProblem HankelProblem::with_offset(int d) const {
  HankelProblem p = *this;
  p.offset = d;
  return p;
}

void HankelProblem::validate() const {
  if (dimension < 1) throw InvalidArgument("Hankel dimension must be at least 1");
  if (offset < 0) throw InvalidArgument("Hankel offset must be non-negative");
  if (potential.geometry != geometry.kind) throw InvalidArgument("potential and geometry disagree on the geometry kind");
}

std::string HankelProblem::describe() const {
  std::ostringstream os;
  os << potential.name() << " " << geometry.name() << " ansatz=" << to_string(ansatz) << " D=" << dimension
     << " d=" << offset << " unknown=" << to_string(unknown) << " fixed=" << fixed_value;
  return os.str();
}

HankelEvaluator::HankelEvaluator(HankelProblem problem) : problem_(std::move(problem)) {
  problem_.validate();
  q_jmax_ = q_jmax_needed(problem_.potential, problem_.geometry, problem_.ansatz, problem_.sequence_length());
  shape_ = shape_series(problem_.potential, q_jmax_);
}

BigReal HankelEvaluator::value(const BigReal& x) const {
  return determinant_at(x, BigReal(problem_.fixed_value, x.digits()));
}

DualReal HankelEvaluator::eval(const DualReal& x) const {
  return determinant_at(x, DualReal::constant(BigReal(problem_.fixed_value, x.digits())));
}

Rational HankelEvaluator::exact(const Rational& x) const { return determinant_at(x, problem_.fixed_value); }

DualReal hankel_eval(const HankelProblem& problem, const DualReal& x) { return HankelEvaluator(problem).eval(x); }

BigReal hankel_value(const HankelProblem& problem, const BigReal& x) { return HankelEvaluator(problem).value(x); }

Rational hankel_eval_exact(const HankelProblem& problem, const Rational& x) {
  return HankelEvaluator(problem).exact(x);
}

XiSeries hankel_series(const HankelProblem& problem, const XiSeries& x, const XiSeries& fixed) {
  if (x.order() != fixed.order()) throw InvalidArgument("xi-series truncation orders differ");
  return HankelEvaluator(problem).determinant_at(x, fixed);
}

}  // namespace rpm
