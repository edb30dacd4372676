#pragma once

// Exact threshold expansions E(xi) = E1 xi + E2 xi^2 + ... about a critical
// depth v0_base, found by annihilating the Hankel determinant order by order
// with v0 = v0_base + xi substituted as a truncated rational series.

#include <optional>
#include <string>
#include <vector>

#include "rpm/hankel.hpp"

namespace rpm {

/// Dense polynomial with exact coefficients, lowest degree first.
using Polynomial = std::vector<Rational>;

struct PerturbationOptions {
  int dimension = 5;
  int offset = 0;
  Ansatz ansatz = Ansatz::f;
  /// Also run dimensions 1 .. dimension+1 to find where each series stops
  /// changing.
  bool stability_scan = true;
};

struct PerturbationSeries {
  PotentialSpec potential;
  Geometry geometry;
  int n = 0;  // index of v0_base on the known critical ladder, 0 if unknown
  Rational v0_base;
  std::vector<Rational> coeffs;  // E^(1) .. E^(K); shorter when a branch ends
  int branch_id = 0;
  /// Set when the next coefficient is not rational: the square-free
  /// polynomial it is a root of.
  std::optional<Polynomial> defining_polynomial;
  int dimension = 0;
  /// Smallest dimension from which the coefficients agree exactly with those
  /// at `dimension` and at `dimension + 1`.
  std::optional<int> stable_from;

  bool complete(int order) const { return static_cast<int>(coeffs.size()) == order; }
};

/// Every branch of the expansion through order K at dimension
/// options.dimension. Throws InvalidArgument unless the E = 0 determinant
/// vanishes exactly at v0_base.
std::vector<PerturbationSeries> perturb_at_threshold(const PotentialSpec& potential, const Geometry& geometry,
                                                     const Rational& v0_base, int order,
                                                     const PerturbationOptions& options = {});

enum class SlopeCheck { consistent, violates_hellmann_feynman };

std::string to_string(SlopeCheck c);

/// dE/dv0 = -<-V/v0> <= 0, so a bound state cannot enter with E^(1) > 0.
SlopeCheck slope_sign_check(const PerturbationSeries& series);

/// Real rational roots of p, ascending, each once.
std::vector<Rational> rational_roots(const Polynomial& p);
/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);
Rational evaluate(const Polynomial& p, const Rational& x);
std::string to_string(const Polynomial& p, const std::string& var = "t");

}  // namespace rpm
