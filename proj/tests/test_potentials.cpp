#include <doctest.h>

#include "rpm/potentials.hpp"

using namespace rpm;

namespace {

// sum_j w_j t^j at 50 digits
BigReal sum_shape(const ShapeSeries& s, const BigReal& t) {
  BigReal acc(0L, 50);
  for (int j = s.start; j <= s.last_index(); ++j) acc += pow(t, static_cast<long>(j)) * s.at(j);
  return acc;
}

}  // namespace

TEST_CASE("gaussian Q coefficients") {
  const Rational E(-1, 3), v0(5, 2);
  const auto q = q_coeffs(PotentialSpec::gaussian(), E, v0, 4);
  CHECK(q[0] == Rational(2) * (E + v0));
  CHECK(q[1] == -Rational(2) * v0);
  CHECK(q[2] == v0);
  CHECK(q[3] == -v0 / Rational(3));
  CHECK(q.parity_indexing);
}

TEST_CASE("rational m=2 Q coefficients") {
  const Rational v0(7);
  const auto q = q_coeffs(PotentialSpec::rational_m(Rational(2)), Rational(0), v0, 5);
  for (int j = 0; j <= 5; ++j) CHECK(q[j] == Rational(2) * v0 * Rational(j % 2 ? -1 : 1) * Rational(j + 1));
  CHECK(q[1] == Rational(-28));
  CHECK(q[2] == Rational(42));
}

TEST_CASE("poschl-teller shape starts 1 - x^2 + 2x^4/3") {
  const auto s = shape_series(PotentialSpec::poschl_teller(), 3);
  CHECK(s.at(0) == Rational(1));
  CHECK(s.at(1) == Rational(-1));
  CHECK(s.at(2) == Rational(2, 3));
  CHECK(s.at(3) == Rational(-17, 45));
}

TEST_CASE("yukawa shape begins at r^-1") {
  const auto s = shape_series(PotentialSpec::yukawa(), 3);
  CHECK(s.start == -1);
  CHECK(s.at(-1) == Rational(1));
  CHECK(s.at(0) == Rational(-1));
  CHECK(s.at(1) == Rational(1, 2));
  CHECK(s.at(2) == Rational(-1, 6));
  const auto q = q_coeffs(PotentialSpec::yukawa(), Rational(-1, 8), Rational(1), 2);
  CHECK(q.start_index == -1);
  CHECK(q[-1] == Rational(2));
  CHECK(q[0] == Rational(-2) + Rational(-1, 4));
}

TEST_CASE("central-field even wells carry only even powers of r") {
  const auto s = shape_series(PotentialSpec::gaussian(GeometryKind::central_field), 6);
  CHECK(s.at(0) == Rational(1));
  CHECK(s.at(1) == Rational(0));
  CHECK(s.at(2) == Rational(-1));
  CHECK(s.at(3) == Rational(0));
  CHECK(s.at(4) == Rational(1, 2));
}

TEST_CASE("truncated shape series sum to the closed forms at x = 1/2") {
  const BigReal x(Rational(1, 2), 50);
  const BigReal t = x * x;
  const BigReal tol = pow10(-40, 50);
  CHECK(approx_equal(sum_shape(shape_series(PotentialSpec::gaussian(), 60), t), exp(-t), tol));
  const BigReal c = cosh(x);
  CHECK(approx_equal(sum_shape(shape_series(PotentialSpec::poschl_teller(), 60), t), BigReal(1L, 50) / (c * c), tol));
  // the binomial series of (1 + t)^-m converges like t^j = 4^-j
  const BigReal one_t = t + Rational(1);
  CHECK(approx_equal(sum_shape(shape_series(PotentialSpec::rational_m(Rational(2)), 60), t),
                     BigReal(1L, 50) / (one_t * one_t), pow10(-33, 50)));
  CHECK(approx_equal(sum_shape(shape_series(PotentialSpec::rational_m(Rational(5, 2)), 60), t),
                     pow(one_t, BigReal(Rational(-5, 2), 50)), pow10(-33, 50)));
  CHECK(approx_equal(sum_shape(shape_series(PotentialSpec::yukawa(), 60), x), exp(-x) / x, tol));
}

TEST_CASE("Q is affine in energy and depth") {
  const auto shape = shape_series(PotentialSpec::poschl_teller(), 6);
  const Rational E1(1, 3), E2(-2, 7), v1(3, 2), v2(5);
  const Rational a(2, 5), b(-3, 4);
  const auto q1 = q_coeffs(shape, GeometryKind::parity_1d, E1, v1, 6);
  const auto q2 = q_coeffs(shape, GeometryKind::parity_1d, E2, v2, 6);
  const auto q12 = q_coeffs(shape, GeometryKind::parity_1d, a * E1 + b * E2, a * v1 + b * v2, 6);
  const auto q0 = q_coeffs(shape, GeometryKind::parity_1d, Rational(0), Rational(0), 6);
  for (int j = 0; j <= 6; ++j) {
    CHECK(q0[j] == Rational(0));
    CHECK(q12[j] == a * q1[j] + b * q2[j]);
  }
}

TEST_CASE("rational m=3 matches the cubed reciprocal series") {
  const int n = 8;
  const XiSeries base({Rational(1), Rational(1)}, n);  // 1 + t
  const XiSeries one(Rational(1), n);
  const XiSeries inv = one / (base * base * base);
  const auto s = shape_series(PotentialSpec::rational_m(Rational(3)), n);
  for (int j = 0; j <= n; ++j) CHECK(s.at(j) == inv[j]);
}

TEST_CASE("potential parsing") {
  CHECK(PotentialSpec::parse("gaussian", GeometryKind::parity_1d).family == Family::gaussian);
  CHECK(PotentialSpec::parse("Poschl-Teller", GeometryKind::parity_1d).family == Family::poschl_teller);
  CHECK(PotentialSpec::parse("rational:m=5/2", GeometryKind::parity_1d).exponent == Rational(5, 2));
  const auto c = PotentialSpec::parse("custom:1,-1,1/2", GeometryKind::parity_1d);
  REQUIRE(c.custom.size() == 3);
  CHECK(c.custom[2] == Rational(1, 2));
  CHECK(c.name() == "custom:1,-1,1/2");
  CHECK_THROWS_AS(PotentialSpec::parse("square", GeometryKind::parity_1d), ParseError);
  CHECK_THROWS_AS(PotentialSpec::parse("yukawa", GeometryKind::parity_1d), InvalidArgument);
  CHECK_THROWS_AS(PotentialSpec::rational_m(Rational(-1)), InvalidArgument);
  CHECK_THROWS_AS(q_coeffs(shape_series(PotentialSpec::gaussian(), 3), GeometryKind::parity_1d, Rational(0),
                           Rational(1), 5),
                  InvalidArgument);
}
