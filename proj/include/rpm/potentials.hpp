#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rpm/errors.hpp"
#include "rpm/rational.hpp"
#include "rpm/ring.hpp"

namespace rpm {

enum class GeometryKind { parity_1d, central_field };

enum class Family {
  poschl_teller,  // V = -v0 / cosh^2 x
  gaussian,       // V = -v0 exp(-x^2)   (gaussian_1d or gaussian_radial)
  rational,       // V = -v0 / (1 + x^2)^m
  yukawa,         // V = -v0 exp(-r) / r, central field only
  custom,         // V = -v0 sum_j w_j x^(2j) with user-supplied w_j
};

/// A well family with its shape parameters and the geometry it is solved in.
struct PotentialSpec {
  Family family = Family::gaussian;
  GeometryKind geometry = GeometryKind::parity_1d;
  Rational exponent{2};          // m, rational family only
  std::vector<Rational> custom;  // w_j, custom family only

  static PotentialSpec poschl_teller(GeometryKind g = GeometryKind::parity_1d);
  static PotentialSpec gaussian(GeometryKind g = GeometryKind::parity_1d);
  static PotentialSpec rational_m(Rational m, GeometryKind g = GeometryKind::parity_1d);
  static PotentialSpec yukawa();
  static PotentialSpec custom_shape(std::vector<Rational> w, GeometryKind g = GeometryKind::parity_1d);

  /// "gaussian", "poschl-teller", "rational:m=2", "rational:m=5/2", "yukawa",
  /// "custom:1,-1,1/2".
  static PotentialSpec parse(std::string_view text, GeometryKind g);

  /// Even families depend on the coordinate only through its square.
  bool is_even() const { return family != Family::yukawa; }
  std::string name() const;
};

/// Exact Taylor coefficients of the normalized shape v = -V / v0:
/// v(t) = sum_{j >= start} w[j - start] t^j, where t = x^2 in the parity
/// geometry and t = r in the central-field geometry.
struct ShapeSeries {
  int start = 0;
  std::vector<Rational> w;

  const Rational& at(int j) const;
  int last_index() const { return start + static_cast<int>(w.size()) - 1; }
};

ShapeSeries shape_series(const PotentialSpec& spec, int jmax);

/// Taylor coefficients of Q = 2 [E - V]. In the parity geometry index j is
/// the coefficient of x^(2j); in the central geometry it is that of r^j and
/// the sequence starts at j = -1 for Coulomb-like wells.
template <class R>
struct QCoeffs {
  int start_index = 0;
  bool parity_indexing = true;
  std::vector<R> coeffs;

  int jmax() const { return start_index + static_cast<int>(coeffs.size()) - 1; }
  /// Coefficient j; indices below start_index are zero.
  R at(int j, const R& like) const {
    if (j < start_index || j > jmax()) return lift(Rational(0), like);
    return coeffs[static_cast<std::size_t>(j - start_index)];
  }
  const R& operator[](int j) const { return coeffs[static_cast<std::size_t>(j - start_index)]; }
};

/// Q_j = 2 E [j = 0] + 2 v0 w_j. Every coefficient is affine in (E, v0), so
/// this is valid over any coefficient ring.
template <class R>
QCoeffs<R> q_coeffs(const ShapeSeries& shape, GeometryKind geometry, const R& energy, const R& depth, int jmax) {
  if (jmax < 0) throw InvalidArgument("jmax must be non-negative");
  if (shape.last_index() < jmax) throw InvalidArgument("shape series shorter than requested jmax");
  QCoeffs<R> q;
  q.start_index = shape.start;
  q.parity_indexing = geometry == GeometryKind::parity_1d;
  const R two_depth = depth * Rational(2);
  q.coeffs.reserve(static_cast<std::size_t>(jmax - shape.start + 1));
  for (int j = shape.start; j <= jmax; ++j) {
    R c = two_depth * shape.at(j);
    if (j == 0) c += energy * Rational(2);
    q.coeffs.push_back(std::move(c));
  }
  return q;
}

template <class R>
QCoeffs<R> q_coeffs(const PotentialSpec& spec, const R& energy, const R& depth, int jmax) {
  return q_coeffs(shape_series(spec, jmax), spec.geometry, energy, depth, jmax);
}

}  // namespace rpm
