#pragma once

// Closed forms and asymptotic estimates used as oracles and baselines.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rpm/big_real.hpp"
#include "rpm/potentials.hpp"
#include "rpm/rational.hpp"
#include "rpm/riccati.hpp"

namespace rpm {

/// Bound-state energy of V = -v0 / cosh^2 x:
/// E_n = -(lambda - n - 1)^2 / 2, lambda = (1 + sqrt(1 + 8 v0)) / 2.
BigReal mpt_energy(int n, const BigReal& v0);

/// v0 at which the n-th level of the cosh^-2 well reaches threshold.
Rational mpt_critical(int n);

/// Critical depths of V = -v0/(1+x^2)^2:
///   branch 1: ((2k+s-1)^2 - 1)/2,   branch 2: ((2k+s)^2 - 1)/2,   k >= 1.
Rational rational_critical(int k, int s, int branch);

/// Both branches and parities merged, sorted, duplicates and zero removed:
/// n(n+2)/2 for n = 1..count.
std::vector<Rational> rational_critical_ladder(int count);

/// Coefficients of xi^2 .. xi^(K+1) in E_n(n(n+1)/2 + xi) for the cosh^-2
/// well (the first-order term vanishes). Composed exactly from the closed
/// form as -(2n+1)^2 (sqrt(1+u) - 1)^2 / 8 with u = 8 xi / (2n+1)^2.
std::vector<Rational> mpt_perturbation(int n, int K);

/// c_0 .. c_jmax of the expansion u = sum c_j x^(2j+s) for the rational
/// well after psi = (1+x^2)^alpha u:
/// (2j+s+1)(2j+s+2) c_{j+1} + [(2j+s+2a)(2j+s+2a-1) + 2E] c_j + 2E c_{j-1} = 0.
std::vector<Rational> appendix_recurrence(const Rational& alpha, int s, const Rational& energy, int jmax);

/// Degree of the polynomial the E = 0 recurrence produces, if it terminates
/// within jmax.
std::optional<int> termination_degree(const Rational& alpha, int s, int jmax);

/// The alpha values for which the E = 0 series is a polynomial of degree
/// exactly k in x^2: -k - s/2 and -k - s/2 + 1/2.
std::vector<Rational> terminating_alphas(int k, int s);

/// Depth tied to alpha by 2 alpha^2 - 2 alpha - v0 = 0.
Rational depth_for_alpha(const Rational& alpha);

enum class Asymptotics { convergent, divergent };

std::string to_string(Asymptotics a);

struct ThresholdWavefunction {
  Family family = Family::rational;
  int n = 0;
  int s = 0;
  Rational v0;
  Asymptotics classification = Asymptotics::convergent;
  std::function<BigReal(const BigReal&)> psi;

  BigReal operator()(const BigReal& x) const { return psi(x); }
};

/// Cataloged E = 0 solutions: cosh^-2 well n = 1, 2 and rational well
/// n = 1..4, both parities. Throws InvalidArgument otherwise.
ThresholdWavefunction threshold_wavefunction(Family family, int n, int s);

/// Classification the bounded/linear growth rule predicts: convergent iff
/// n + s is even.
Asymptotics expected_asymptotics(int n, int s);

/// Large-l estimate e l (l+1) / 2.
BigReal wkb_critical(int l, int digits);
/// Trial-function bounds for n = 1 (yukawa and gaussian only).
BigReal variational_critical(Family family, int l, int digits);
/// log10 |(exact - approx) / exact|.
BigReal log_error(const BigReal& exact, const BigReal& approx);

enum class RootLabel { physical, spurious, unlabeled };

std::string to_string(RootLabel label);

/// A known eigenvalue (or spurious-root prediction) of a well at a given
/// depth, used to label roots of the Hankel condition.
struct ReferenceValue {
  BigReal value;
  RootLabel label = RootLabel::physical;
  std::string source;
};

/// Reference energies for (potential, geometry) at depth v0: exact levels of
/// the cosh^-2 well, published eigenvalues of the rational well, and the
/// spurious-root series about its thresholds evaluated at xi = v0 - v0_n.
std::vector<ReferenceValue> reference_energies(const PotentialSpec& potential, const Geometry& geometry,
                                               const Rational& v0, int digits);

/// Nearest reference value within relative distance tol of x.
std::optional<ReferenceValue> match_reference(const BigReal& x, const std::vector<ReferenceValue>& refs,
                                              double tol = 1e-3);
RootLabel label_root(const BigReal& x, const std::vector<ReferenceValue>& refs, double tol = 1e-3);

/// Exact threshold series about the rational-well criticals, orders 1..5.
struct ThresholdSeriesRecord {
  Rational v0_base;
  int s = 0;
  std::vector<Rational> coeffs;
};

const std::vector<ThresholdSeriesRecord>& rational_threshold_series();

}  // namespace rpm
