#include "rpm/riccati.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace rpm {

Geometry Geometry::parity(int s) {
  if (s != 0 && s != 1) throw InvalidArgument("parity index s must be 0 or 1");
  return {GeometryKind::parity_1d, s, 0};
}

Geometry Geometry::central(int l) {
  if (l < 0) throw InvalidArgument("angular momentum must be non-negative");
  return {GeometryKind::central_field, 0, l};
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("bad geometry '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Geometry Geometry::parse(std::string_view text) {
  if (text == "even") return parity(0);
  if (text == "odd") return parity(1);
  if (text.rfind("parity=", 0) == 0) return parity(parse_int(text.substr(7), text));
  if (text.rfind("s=", 0) == 0) return parity(parse_int(text.substr(2), text));
  if (text.rfind("l=", 0) == 0) return central(parse_int(text.substr(2), text));
  throw ParseError("bad geometry '" + std::string(text) + "' (expected parity=0|1 or l=N)");
}

std::string Geometry::name() const {
  return kind == GeometryKind::parity_1d ? "parity=" + std::to_string(s) : "l=" + std::to_string(l);
}

Ansatz parse_ansatz(std::string_view text) {
  if (text == "f") return Ansatz::f;
  if (text == "g") return Ansatz::g;
  throw ParseError("ansatz must be 'f' or 'g'");
}

std::string to_string(Ansatz a) { return a == Ansatz::f ? "f" : "g"; }

int q_jmax_needed(const PotentialSpec& potential, const Geometry& geometry, Ansatz ansatz, int count) {
  const int j = count - 1;
  if (geometry.kind == GeometryKind::parity_1d) return (ansatz == Ansatz::g && geometry.s == 0) ? j + 1 : j;
  const int rj = potential.is_even() ? 2 * j + 1 : j;
  return std::max(rj - 1, 0);
}

}  // namespace rpm
