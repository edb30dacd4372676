#pragma once

#include <string>
#include <vector>

#include "rpm/potentials.hpp"
#include "rpm/riccati.hpp"
#include "rpm/ring.hpp"

namespace rpm {

template <class R>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int size() const { return n_; }
  R& operator()(int i, int j) { return a_[index(i, j)]; }
  const R& operator()(int i, int j) const { return a_[index(i, j)]; }
  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < n_; ++j) std::swap(a_[index(i, j)], a_[index(k, j)]);
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  int n_ = 0;
  std::vector<R> a_;
};

/// D x D Hankel matrix with (1-based) entry (i, j) = c_{i+j+d-1}.
template <class R>
SquareMatrix<R> hankel_matrix(const std::vector<R>& c, int dimension, int offset) {
  if (dimension < 1) throw InvalidArgument("Hankel dimension must be at least 1");
  if (offset < 0) throw InvalidArgument("Hankel offset must be non-negative");
  if (static_cast<int>(c.size()) <= hankel_jmax(dimension, offset))
    throw InvalidArgument("coefficient sequence too short for the Hankel matrix");
  SquareMatrix<R> m(dimension);
  for (int i = 0; i < dimension; ++i)
    for (int j = 0; j < dimension; ++j) m(i, j) = c[static_cast<std::size_t>(i + j + offset + 1)];
  return m;
}

/// Gaussian elimination, partial pivoting on magnitude.
BigReal determinant(SquareMatrix<BigReal> m);
/// Pivoting on the magnitude of the value component. When a pivot column
/// vanishes exactly in value the determinant is zero; its derivative is then
/// recovered from the remaining block by Jacobi's formula.
DualReal determinant(SquareMatrix<DualReal> m);
/// Exact; rows are scaled to integers and reduced by fraction-free Bareiss
/// elimination.
Rational determinant(SquareMatrix<Rational> m);
/// Truncated series, pivoting on the lowest nonzero order. Throws
/// OrderDeficiency if a pivot column vanishes within the truncation order.
XiSeries determinant(SquareMatrix<XiSeries> m);

enum class Unknown { energy, depth };

std::string to_string(Unknown u);

/// One determinant condition H_D^d = |c_{i+j+d-1}|, the ansatz sequence
/// evaluated at (E, v0) with one of them free.
struct HankelProblem {
  PotentialSpec potential;
  Geometry geometry;
  Ansatz ansatz = Ansatz::f;
  int dimension = 1;
  int offset = 0;
  Unknown unknown = Unknown::depth;
  Rational fixed_value{0};

  HankelProblem with_dimension(int dimension) const;
  HankelProblem with_offset(int offset) const;
  void validate() const;
  /// Number of ansatz coefficients read: indices 0 .. 2D+d-1.
  int sequence_length() const { return hankel_jmax(dimension, offset) + 1; }
  std::string describe() const;
};

/// Caches the exact shape series of a problem so repeated evaluations at
/// different unknowns only redo the ring arithmetic.
class HankelEvaluator {
 public:
  explicit HankelEvaluator(HankelProblem problem);

  const HankelProblem& problem() const { return problem_; }

  template <class R>
  std::vector<R> sequence(const R& unknown, const R& fixed) const {
    const R& energy = problem_.unknown == Unknown::energy ? unknown : fixed;
    const R& depth = problem_.unknown == Unknown::energy ? fixed : unknown;
    auto q = q_coeffs(shape_, problem_.potential.geometry, energy, depth, q_jmax_);
    return ansatz_sequence(problem_.potential, problem_.geometry, problem_.ansatz, q, problem_.sequence_length(),
                           unknown);
  }

  template <class R>
  R determinant_at(const R& unknown, const R& fixed) const {
    return determinant(hankel_matrix(sequence(unknown, fixed), problem_.dimension, problem_.offset));
  }

  /// Fixed parameter embedded at the precision of x.
  BigReal value(const BigReal& x) const;
  DualReal eval(const DualReal& x) const;
  Rational exact(const Rational& x) const;

 private:
  HankelProblem problem_;
  int q_jmax_ = 0;
  ShapeSeries shape_;
};

/// (H, dH/dx) with x seeded as (value, 1).
DualReal hankel_eval(const HankelProblem& problem, const DualReal& x);
BigReal hankel_value(const HankelProblem& problem, const BigReal& x);
Rational hankel_eval_exact(const HankelProblem& problem, const Rational& x);
/// Determinant as a truncated xi-series; x and fixed must share the order.
XiSeries hankel_series(const HankelProblem& problem, const XiSeries& x, const XiSeries& fixed);

}  // namespace rpm
