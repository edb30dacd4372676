#include "rpm/potentials.hpp"

#include <cctype>

namespace rpm {

namespace {

using Series = std::vector<Rational>;

Series multiply(const Series& a, const Series& b, std::size_t n) {
  Series r(n, Rational(0));
  for (std::size_t i = 0; i < n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series reciprocal(const Series& a, std::size_t n) {
  Series r(n, Rational(0));
  r[0] = Rational(1) / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return r;
}

// Coefficients in y = x^2, indices 0..n-1.
Series even_shape(const PotentialSpec& spec, std::size_t n) {
  Series w(n, Rational(0));
  switch (spec.family) {
    case Family::poschl_teller: {
      // sech^2 x = 1 / cosh^2 x, cosh x = sum y^k / (2k)!
      Series ch(n);
      for (std::size_t k = 0; k < n; ++k) ch[k] = Rational(1) / factorial(static_cast<unsigned>(2 * k));
      return reciprocal(multiply(ch, ch, n), n);
    }
    case Family::gaussian:
      for (std::size_t k = 0; k < n; ++k)
        w[k] = Rational(k % 2 ? -1 : 1) / factorial(static_cast<unsigned>(k));
      return w;
    case Family::rational:
      for (std::size_t k = 0; k < n; ++k) w[k] = binomial(-spec.exponent, static_cast<unsigned>(k));
      return w;
    case Family::custom:
      for (std::size_t k = 0; k < n && k < spec.custom.size(); ++k) w[k] = spec.custom[k];
      return w;
    case Family::yukawa:
      break;
  }
  throw InvalidArgument("family has no even shape series");
}

}  // namespace

PotentialSpec PotentialSpec::poschl_teller(GeometryKind g) { return {Family::poschl_teller, g, Rational(2), {}}; }
PotentialSpec PotentialSpec::gaussian(GeometryKind g) { return {Family::gaussian, g, Rational(2), {}}; }
PotentialSpec PotentialSpec::rational_m(Rational m, GeometryKind g) {
  if (m.sign() <= 0) throw InvalidArgument("rational exponent m must be positive");
  return {Family::rational, g, std::move(m), {}};
}
PotentialSpec PotentialSpec::yukawa() { return {Family::yukawa, GeometryKind::central_field, Rational(2), {}}; }
PotentialSpec PotentialSpec::custom_shape(std::vector<Rational> w, GeometryKind g) {
  if (w.empty()) throw InvalidArgument("custom shape needs at least one coefficient");
  return {Family::custom, g, Rational(2), std::move(w)};
}

PotentialSpec PotentialSpec::parse(std::string_view text, GeometryKind g) {
  std::string s(text);
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "gaussian") return gaussian(g);
  if (s == "poschl-teller" || s == "poschl_teller" || s == "mpt") return poschl_teller(g);
  if (s == "yukawa") {
    if (g != GeometryKind::central_field) throw InvalidArgument("yukawa is a central-field potential");
    return yukawa();
  }
  if (s == "rational") return rational_m(Rational(2), g);
  if (s.rfind("rational:", 0) == 0) {
    std::string arg = s.substr(9);
    if (arg.rfind("m=", 0) == 0) arg = arg.substr(2);
    return rational_m(Rational::parse(arg), g);
  }
  if (s.rfind("custom:", 0) == 0) {
    std::vector<Rational> w;
    std::string rest = s.substr(7);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      w.push_back(Rational::parse(rest.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return custom_shape(std::move(w), g);
  }
  throw ParseError("unknown potential family '" + std::string(text) + "'");
}

std::string PotentialSpec::name() const {
  switch (family) {
    case Family::poschl_teller: return "poschl-teller";
    case Family::gaussian: return "gaussian";
    case Family::rational: return "rational:m=" + exponent.to_string();
    case Family::yukawa: return "yukawa";
    case Family::custom: {
      std::string s = "custom:";
      for (std::size_t k = 0; k < custom.size(); ++k) s += (k ? "," : "") + custom[k].to_string();
      return s;
    }
  }
  return "?";
}

const Rational& ShapeSeries::at(int j) const {
  static const Rational zero(0);
  if (j < start || j > last_index()) return zero;
  return w[static_cast<std::size_t>(j - start)];
}

ShapeSeries shape_series(const PotentialSpec& spec, int jmax) {
  if (jmax < 0) throw InvalidArgument("jmax must be non-negative");
  ShapeSeries out;
  if (spec.family == Family::yukawa) {
    // exp(-r) / r = sum_{j >= -1} (-1)^(j+1) r^j / (j+1)!
    if (spec.geometry != GeometryKind::central_field) throw InvalidArgument("yukawa is a central-field potential");
    out.start = -1;
    for (int j = -1; j <= jmax; ++j)
      out.w.push_back(Rational((j + 1) % 2 ? -1 : 1) / factorial(static_cast<unsigned>(j + 1)));
    return out;
  }
  if (spec.geometry == GeometryKind::parity_1d) {
    out.w = even_shape(spec, static_cast<std::size_t>(jmax) + 1);
    return out;
  }
  // central field, even well: only even powers of r
  const Series y = even_shape(spec, static_cast<std::size_t>(jmax / 2) + 1);
  out.w.assign(static_cast<std::size_t>(jmax) + 1, Rational(0));
  for (std::size_t k = 0; 2 * k <= static_cast<std::size_t>(jmax); ++k) out.w[2 * k] = y[k];
  return out;
}

}  // namespace rpm
