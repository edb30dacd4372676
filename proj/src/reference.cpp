#include "rpm/reference.hpp"

#include <algorithm>
#include <cmath>

#include "rpm/xi_series.hpp"

namespace rpm {

BigReal mpt_energy(int n, const BigReal& v0) {
  if (n < 0) throw InvalidArgument("level index must be non-negative");
  const int digits = v0.digits();
  BigReal lambda = (sqrt(v0 * Rational(8) + Rational(1)) + Rational(1)) / Rational(2);
  BigReal gap = lambda - Rational(n + 1);
  if (gap.sign() < 0) throw StateNotBound("level " + std::to_string(n) + " is not bound at v0 = " + v0.to_string(12));
  BigReal e = gap * gap / Rational(-2);
  return e.with_digits(digits);
}

Rational mpt_critical(int n) {
  if (n < 0) throw InvalidArgument("level index must be non-negative");
  return Rational(static_cast<long>(n) * (n + 1), 2);
}

Rational rational_critical(int k, int s, int branch) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (s != 0 && s != 1) throw InvalidArgument("parity index s must be 0 or 1");
  long m;
  if (branch == 1)
    m = 2L * k + s - 1;
  else if (branch == 2)
    m = 2L * k + s;
  else
    throw InvalidArgument("branch must be 1 or 2");
  return Rational(m * m - 1, 2);
}

std::vector<Rational> rational_critical_ladder(int count) {
  std::vector<Rational> all;
  for (int k = 1; k <= count + 1; ++k)
    for (int s = 0; s <= 1; ++s)
      for (int b = 1; b <= 2; ++b) all.push_back(rational_critical(k, s, b));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  all.erase(std::remove_if(all.begin(), all.end(), [](const Rational& q) { return q.is_zero(); }), all.end());
  if (static_cast<int>(all.size()) > count) all.resize(static_cast<std::size_t>(count));
  return all;
}

std::vector<Rational> mpt_perturbation(int n, int K) {
  if (n < 0 || K < 0) throw InvalidArgument("need n >= 0 and K >= 0");
  const int order = K + 1;
  const Rational w(2L * n + 1);
  const Rational scale = Rational(8) / (w * w);
  XiSeries root(order);
  Rational power(1);
  for (int k = 0; k <= order; ++k) {
    root[k] = binomial(Rational(1, 2), static_cast<unsigned>(k)) * power;
    power *= scale;
  }
  root -= Rational(1);
  XiSeries e = root * root * (-(w * w) / Rational(8));
  std::vector<Rational> out;
  for (int k = 2; k <= order; ++k) out.push_back(e[k]);
  return out;
}

std::vector<Rational> appendix_recurrence(const Rational& alpha, int s, const Rational& energy, int jmax) {
  if (jmax < 0) throw InvalidArgument("jmax must be non-negative");
  std::vector<Rational> c{Rational(1)};
  Rational prev(0);
  const Rational two_e = energy * Rational(2);
  for (int j = 0; j < jmax; ++j) {
    const Rational a = Rational(2L * j + s) + alpha * Rational(2);
    Rational next = -((a * (a - Rational(1)) + two_e) * c.back() + two_e * prev);
    next /= Rational((2L * j + s + 1) * (2L * j + s + 2));
    prev = c.back();
    c.push_back(std::move(next));
  }
  return c;
}

std::optional<int> termination_degree(const Rational& alpha, int s, int jmax) {
  const auto c = appendix_recurrence(alpha, s, Rational(0), jmax + 1);
  for (int j = 0; j <= jmax; ++j)
    if (c[static_cast<std::size_t>(j + 1)].is_zero()) return j;
  return std::nullopt;
}

std::vector<Rational> terminating_alphas(int k, int s) {
  const Rational a1 = Rational(-k) - Rational(s, 2);
  return {a1, a1 + Rational(1, 2)};
}

Rational depth_for_alpha(const Rational& alpha) {
  const Rational t = alpha * Rational(2) - Rational(1);
  return (t * t - Rational(1)) / Rational(2);
}

std::string to_string(Asymptotics a) { return a == Asymptotics::convergent ? "convergent" : "divergent"; }

Asymptotics expected_asymptotics(int n, int s) {
  return (n + s) % 2 == 0 ? Asymptotics::convergent : Asymptotics::divergent;
}

namespace {

using Fn = std::function<BigReal(const BigReal&)>;

Fn mpt_psi(int n, int s) {
  if (n == 1 && s == 0)
    return [](const BigReal& x) {
      BigReal e2 = exp(x * Rational(2));
      return x * Rational(2) / (e2 + Rational(1)) - x + Rational(1);
    };
  if (n == 1 && s == 1)
    return [](const BigReal& x) {
      BigReal e2 = exp(x * Rational(2));
      return BigReal(1L, x.digits()) - BigReal(2L, x.digits()) / (e2 + Rational(1));
    };
  if (n == 2 && s == 0)
    return [](const BigReal& x) {
      BigReal e2 = exp(x * Rational(2));
      BigReal e4 = e2 * e2;
      return (e2 * Rational(4) - e4 - Rational(1)) * Rational(2) / (e4 + e2 * Rational(2) + Rational(1));
    };
  if (n == 2 && s == 1)
    return [](const BigReal& x) {
      BigReal e2 = exp(x * Rational(2));
      BigReal e4 = e2 * e2;
      BigReal num = e4 * (x * Rational(2) - Rational(3)) - x * e2 * Rational(8) + x * Rational(2) + Rational(3);
      return -num / ((e4 + e2 * Rational(2) + Rational(1)) * Rational(4));
    };
  throw InvalidArgument("no cataloged cosh^-2 threshold solution for n=" + std::to_string(n) + ", s=" +
                        std::to_string(s));
}

Fn rational_psi(int n, int s) {
  auto w = [](const BigReal& x) { return x * x + Rational(1); };
  switch (n * 2 + s) {
    case 2:
      return [w](const BigReal& x) { return (BigReal(1L, x.digits()) - x * x) / sqrt(w(x)); };
    case 3:
      return [w](const BigReal& x) { return x / sqrt(w(x)); };
    case 4:
      return [w](const BigReal& x) { return (BigReal(1L, x.digits()) - x * x * Rational(3)) / w(x); };
    case 5:
      return [w](const BigReal& x) { return x * (x * x - Rational(3)) / w(x); };
    case 6:
      return [w](const BigReal& x) {
        BigReal y = x * x;
        BigReal u = w(x);
        return (y + x * Rational(2) - Rational(1)) * (y - x * Rational(2) - Rational(1)) / (u * sqrt(u));
      };
    case 7:
      return [w](const BigReal& x) {
        BigReal u = w(x);
        return x * (x * x - Rational(1)) / (u * sqrt(u));
      };
    case 8:
      return [w](const BigReal& x) {
        BigReal y = x * x;
        BigReal u = w(x);
        return (y * y * Rational(5) - y * Rational(10) + Rational(1)) / (u * u);
      };
    case 9:
      return [w](const BigReal& x) {
        BigReal y = x * x;
        BigReal u = w(x);
        return x * (y * y - y * Rational(10) + Rational(5)) / (u * u);
      };
    default:
      break;
  }
  throw InvalidArgument("no cataloged rational-well threshold solution for n=" + std::to_string(n) + ", s=" +
                        std::to_string(s));
}

}  // namespace

ThresholdWavefunction threshold_wavefunction(Family family, int n, int s) {
  if (s != 0 && s != 1) throw InvalidArgument("parity index s must be 0 or 1");
  ThresholdWavefunction out;
  out.family = family;
  out.n = n;
  out.s = s;
  out.classification = expected_asymptotics(n, s);
  if (family == Family::poschl_teller) {
    out.psi = mpt_psi(n, s);
    out.v0 = mpt_critical(n);
  } else if (family == Family::rational) {
    out.psi = rational_psi(n, s);
    out.v0 = Rational(static_cast<long>(n) * (n + 2), 2);
  } else {
    throw InvalidArgument("threshold solutions are cataloged for the cosh^-2 and rational wells only");
  }
  return out;
}

BigReal wkb_critical(int l, int digits) {
  if (l < 1) throw InvalidArgument("the large-l estimate needs l >= 1");
  return euler_e(digits) * Rational(static_cast<long>(l) * (l + 1), 2);
}

BigReal variational_critical(Family family, int l, int digits) {
  if (l < 0) throw InvalidArgument("angular momentum must be non-negative");
  const int work = digits + 10;
  const BigReal a(static_cast<long>(2 * l + 1), work);
  if (family == Family::yukawa) {
    // 2^(2l) (l+1)^(2l+3) / (2l+1)^(2l+1), in logarithms for large l
    BigReal lg = log(BigReal(2L, work)) * Rational(2L * l) +
                 log(BigReal(static_cast<long>(l + 1), work)) * Rational(2L * l + 3) - log(a) * Rational(2L * l + 1);
    return exp(lg).with_digits(digits);
  }
  if (family == Family::gaussian) {
    // (2l+3)^((2l+5)/2) / (8 (2l+1)^((2l+1)/2))
    BigReal lg = log(BigReal(static_cast<long>(2 * l + 3), work)) * Rational(2L * l + 5, 2) -
                 log(a) * Rational(2L * l + 1, 2);
    return (exp(lg) / Rational(8)).with_digits(digits);
  }
  throw InvalidArgument("variational estimates exist for yukawa and gaussian wells only");
}

BigReal log_error(const BigReal& exact, const BigReal& approx) {
  if (exact.is_zero()) throw InvalidArgument("logarithmic error needs a nonzero reference");
  BigReal rel = abs((exact - approx) / exact);
  if (rel.is_zero()) throw InvalidArgument("approximation is exact; logarithmic error is unbounded");
  return log10(rel);
}

std::string to_string(RootLabel label) {
  switch (label) {
    case RootLabel::physical:
      return "physical";
    case RootLabel::spurious:
      return "spurious";
    case RootLabel::unlabeled:
      break;
  }
  return "unlabeled";
}

const std::vector<ThresholdSeriesRecord>& rational_threshold_series() {
  static const std::vector<ThresholdSeriesRecord> table = {
      {Rational(3, 2), 1,
       {Rational(1, 8), Rational(-7, 64), Rational(29, 768), Rational(-1847, 184320), Rational(275357, 77414400)}},
      {Rational(3, 2), 0,
       {Rational(-1, 8), Rational(17, 192), Rational(-23, 11520), Rational(-271933, 19353600),
        Rational(29363423, 8128512000)}},
      {Rational(4), 0,
       {Rational(1, 32), Rational(-23, 2304), Rational(-919, 331776), Rational(100843, 59719680),
        Rational(mpz_class(-418250431), mpz_class("1203948748800"))}},
      {Rational(4), 1,
       {Rational(-1, 32), Rational(7, 768), Rational(1921, 552960), Rational(-1186027, 696729600),
        Rational(mpz_class("2551967839"), mpz_class("14046068736000"))}},
  };
  return table;
}

namespace {

struct PublishedLevel {
  const char* v0;
  int s;
  const char* energy;
};

// Eigenvalues of V = -v0/(1+x^2)^2 (d=0/d=1 enclosures and rough values).
constexpr PublishedLevel kRationalLevels[] = {
    {"3/2", 0, "-0.69852621716675342023295"},
    {"4", 0, "-2.47134502524126369480127425"},
    {"4", 1, "-0.426405989806470650955"},
    {"1.51", 0, "-0.70483"},
    {"1.49", 0, "-0.692231"},
    {"4.01", 1, "-0.429395"},
};

}  // namespace

std::vector<ReferenceValue> reference_energies(const PotentialSpec& potential, const Geometry& geometry,
                                               const Rational& v0, int digits) {
  std::vector<ReferenceValue> out;
  if (geometry.kind != GeometryKind::parity_1d) return out;
  if (potential.family == Family::poschl_teller) {
    const BigReal depth(v0, digits);
    for (int n = geometry.s;; n += 2) {
      try {
        out.push_back({mpt_energy(n, depth), RootLabel::physical, "exact level n=" + std::to_string(n)});
      } catch (const StateNotBound&) {
        break;
      }
    }
    return out;
  }
  if (potential.family != Family::rational || potential.exponent != Rational(2)) return out;
  for (const auto& lv : kRationalLevels)
    if (lv.s == geometry.s && Rational::parse(lv.v0) == v0)
      out.push_back({BigReal::parse(lv.energy, digits), RootLabel::physical, std::string("published level")});
  for (const auto& rec : rational_threshold_series()) {
    if (rec.s != geometry.s) continue;
    const Rational xi = v0 - rec.v0_base;
    if (xi.is_zero() || abs(xi) > Rational(1, 10)) continue;
    Rational e(0);
    Rational p(1);
    for (const auto& c : rec.coeffs) {
      p *= xi;
      e += c * p;
    }
    out.push_back({BigReal(e, digits), RootLabel::spurious, "threshold series about v0=" + rec.v0_base.to_string()});
  }
  return out;
}

std::optional<ReferenceValue> match_reference(const BigReal& x, const std::vector<ReferenceValue>& refs,
                                              double tol) {
  const ReferenceValue* best = nullptr;
  double best_rel = tol;
  for (const auto& r : refs) {
    if (r.value.is_zero()) continue;
    const double rel = std::fabs(((x - r.value) / r.value).to_double());
    if (rel < best_rel) {
      best_rel = rel;
      best = &r;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

RootLabel label_root(const BigReal& x, const std::vector<ReferenceValue>& refs, double tol) {
  auto m = match_reference(x, refs, tol);
  return m ? m->label : RootLabel::unlabeled;
}

}  // namespace rpm
