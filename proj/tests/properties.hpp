#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// gate. Each returns an empty string on success, else a failure message.

#include <random>
#include <string>
#include <vector>

#include "rpm/hankel.hpp"

namespace rpm::props {

/// Random rational p/q with |p| <= range, 1 <= q <= den.
Rational random_rational(std::mt19937_64& rng, long range = 9, long den = 7);

/// Residual of the Riccati equation for f, all geometries, exact.
std::string riccati_defect(int trials, unsigned seed);
/// Residual of the f-g relation, all geometries, exact.
std::string g_relation(int trials, unsigned seed);
/// Dual derivatives of random +,-,*,/ pipelines and of Hankel evaluations
/// against central differences.
std::string dual_vs_difference(int trials, unsigned seed);
/// The leading denominator coefficient of the [N+d/N] Pade approximant,
/// found by a plain linear solve, is H_N^(d+1) over the Toeplitz system
/// determinant.
std::string pade_hankel(int trials, unsigned seed);
/// Central-field l = 0 coefficients of even wells equal the odd-parity ones,
/// and so do the determinants.
std::string parity_central(int trials, unsigned seed);

/// Coefficients of -(sum scale (j+1) c_{j+1} t^j) / (sum c_j t^j): the
/// logarithmic derivative -u'/u, divided by x when u is a series in t = x^2
/// (scale 2), or in r itself (scale 1).
std::vector<Rational> log_derivative(const std::vector<Rational>& c, int count, long scale);
/// Even (s = 0) or odd (s = 1) solution of psi'' + Q psi = 0 regular at 0,
/// psi = x^s sum c_j x^(2j), from the raw Taylor recurrence.
std::vector<Rational> parity_wavefunction(const std::vector<Rational>& q, int s, int count);
/// psi = r^(l+1) sum c_j r^j for the radial equation with Q = sum_{j>=-1} Q_j r^j.
std::vector<Rational> radial_wavefunction(const std::vector<Rational>& q_from_minus1, int l, int count);

}  // namespace rpm::props
