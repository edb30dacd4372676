#include "rpm/perturbation.hpp"

#include <algorithm>
#include <sstream>

#include "rpm/reference.hpp"

namespace rpm {

namespace {

void trim(Polynomial& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Polynomial& p) { return static_cast<int>(p.size()) - 1; }

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

// Quotient and remainder; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
  trim(a);
  Polynomial q;
  if (degree(a) < degree(b)) return {q, a};
  q.assign(static_cast<std::size_t>(degree(a) - degree(b) + 1), Rational(0));
  while (!a.empty() && degree(a) >= degree(b)) {
    const int shift = degree(a) - degree(b);
    const Rational f = a.back() / b.back();
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= degree(b); ++i) a[static_cast<std::size_t>(i + shift)] -= f * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return {q, a};
}

Polynomial monic(Polynomial p) {
  trim(p);
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, derivative(p)};
  while (!chain.back().empty() && degree(chain.back()) > 0) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    const int s = evaluate(q, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Simplest fraction in [lo, hi] (Stern-Brocot descent via continued
// fractions).
Rational simplest_between(Rational lo, Rational hi) {
  if (lo > hi) std::swap(lo, hi);
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
  Rational f(fl);
  if (f == lo) return lo;
  if (f + Rational(1) <= hi) return f + Rational(1);
  // lo and hi share the integer part.
  Rational inner = simplest_between(Rational(1) / (hi - f), Rational(1) / (lo - f));
  return f + Rational(1) / inner;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  Polynomial c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial basis{Rational(1)};
    Rational den(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Polynomial nb(basis.size() + 1, Rational(0));
      for (std::size_t a = 0; a < basis.size(); ++a) {
        nb[a + 1] += basis[a];
        nb[a] -= basis[a] * xs[j];
      }
      basis = std::move(nb);
      den *= xs[i] - xs[j];
    }
    const Rational w = ys[i] / den;
    for (std::size_t a = 0; a < n; ++a) c[a] += basis[a] * w;
  }
  trim(c);
  return c;
}

// The lowest xi-order of the determinant that depends on the k-th
// coefficient, as a polynomial in that coefficient. nullopt when the
// prefix already leaves a t-independent nonzero term below it.
struct OrderCondition {
  int order = 0;
  Polynomial poly;
};

class Expander {
 public:
  Expander(HankelProblem problem, const Rational& base, int order)
      : problem_(std::move(problem)), base_(base), order_(order), ev_(problem_) {
    trunc_ = std::max(8, 2 * (order + problem_.dimension));
  }

  XiSeries determinant(const std::vector<Rational>& e, int trunc) const {
    std::vector<Rational> c(e.size() + 1, Rational(0));
    for (std::size_t i = 0; i < e.size(); ++i) c[i + 1] = e[i];
    const XiSeries energy(c, trunc);
    const XiSeries depth = XiSeries::shifted(base_, trunc);
    return ev_.determinant_at(energy, depth);
  }

  std::optional<OrderCondition> condition(const std::vector<Rational>& prefix) {
    const int k = static_cast<int>(prefix.size()) + 1;
    for (int attempt = 0; attempt < 6; ++attempt, trunc_ *= 2) {
      std::vector<Rational> ts;
      std::vector<XiSeries> hs;
      int needed = 3;
      while (true) {
        try {
          while (static_cast<int>(ts.size()) < needed) {
            const long i = static_cast<long>(ts.size());
            const Rational t(i % 2 ? (i + 1) / 2 : -i / 2);  // 0, 1, -1, 2, -2, ...
            std::vector<Rational> e = prefix;
            e.push_back(t);
            ts.push_back(t);
            hs.push_back(determinant(e, trunc_));
          }
        } catch (const OrderDeficiency&) {
          break;
        }
        int v = -1;
        for (int o = 0; o <= trunc_ && v < 0; ++o)
          for (std::size_t i = 1; i < hs.size(); ++i)
            if (hs[i][o] != hs[0][o]) {
              v = o;
              break;
            }
        if (v < 0) break;
        // The xi^v coefficient has degree at most v / k in t.
        if (needed < v / k + 2) {
          needed = v / k + 2;
          continue;
        }
        for (int o = 0; o < v; ++o)
          if (!hs[0][o].is_zero()) return std::nullopt;
        std::vector<Rational> ys;
        for (const auto& h : hs) ys.push_back(h[v]);
        return OrderCondition{v, interpolate(ts, ys)};
      }
      if (trunc_ > 64 * (order_ + problem_.dimension)) break;
    }
    throw OrderDeficiency("no xi-order of the determinant depends on E^(" + std::to_string(k) +
                          ") within the truncation limit; raise the dimension");
  }

 private:
  HankelProblem problem_;
  Rational base_;
  int order_;
  HankelEvaluator ev_;
  int trunc_;
};

struct Branch {
  std::vector<Rational> coeffs;
  std::optional<Polynomial> defining;
};

std::vector<Branch> expand(const HankelProblem& problem, const Rational& base, int order) {
  Expander ex(problem, base, order);
  std::vector<Branch> done;
  std::vector<Branch> open{Branch{}};
  while (!open.empty()) {
    Branch b = std::move(open.back());
    open.pop_back();
    if (static_cast<int>(b.coeffs.size()) == order) {
      done.push_back(std::move(b));
      continue;
    }
    auto cond = ex.condition(b.coeffs);
    if (!cond) continue;  // inconsistent prefix
    const auto roots = rational_roots(cond->poly);
    Polynomial rest = square_free_part(cond->poly);
    for (const auto& r : roots) rest = divmod(rest, Polynomial{-r, Rational(1)}).first;
    if (degree(rest) >= 1) {
      Branch irr = b;
      irr.defining = monic(rest);
      done.push_back(std::move(irr));
    }
    // Reverse so the smallest root is expanded first.
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
      Branch nb = b;
      nb.coeffs.push_back(*it);
      open.push_back(std::move(nb));
    }
  }
  std::sort(done.begin(), done.end(), [](const Branch& a, const Branch& b) {
    const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
    return a.coeffs.size() > b.coeffs.size();
  });
  return done;
}

int ladder_index(const PotentialSpec& potential, const Rational& v0) {
  for (int n = 1; n <= 64; ++n) {
    if (potential.family == Family::poschl_teller && mpt_critical(n) == v0) return n;
    if (potential.family == Family::rational && potential.exponent == Rational(2) &&
        Rational(n * (n + 2), 2) == v0)
      return n;
  }
  return 0;
}

}  // namespace

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial square_free_part(const Polynomial& p) {
  Polynomial q = p;
  trim(q);
  if (degree(q) < 1) return monic(q);
  return monic(divmod(q, gcd(q, derivative(q))).first);
}

std::vector<Rational> rational_roots(const Polynomial& p) {
  Polynomial q = square_free_part(p);
  std::vector<Rational> out;
  if (degree(q) < 1) return out;
  if (degree(q) == 1) return {-q[0] / q[1]};
  Rational bound(1);
  for (int i = 0; i < degree(q); ++i) bound = std::max(bound, abs(q[static_cast<std::size_t>(i)]) + Rational(1));
  const auto chain = sturm_chain(q);
  // Isolate by exact bisection, then try the simplest fraction of each
  // shrinking interval.
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int count = sign_changes(chain, a) - sign_changes(chain, b);
    if (count == 0) continue;
    if (count > 1) {
      const Rational m = (a + b) / Rational(2);
      if (evaluate(q, m).is_zero()) out.push_back(m);
      work.push_back({a, m});
      work.push_back({m, b});
      continue;
    }
    for (int it = 0; it < 400; ++it) {
      const Rational c = simplest_between(a, b);
      if (evaluate(q, c).is_zero()) {
        out.push_back(c);
        break;
      }
      const Rational m = (a + b) / Rational(2);
      if (evaluate(q, m).is_zero()) {
        out.push_back(m);
        break;
      }
      if (sign_changes(chain, a) - sign_changes(chain, m) == 1)
        b = m;
      else
        a = m;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Polynomial& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(p); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    const Rational a = abs(c);
    if (i == 0 || a != Rational(1)) os << a.to_string() << (i > 0 ? "*" : "");
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::vector<PerturbationSeries> perturb_at_threshold(const PotentialSpec& potential, const Geometry& geometry,
                                                     const Rational& v0_base, int order,
                                                     const PerturbationOptions& options) {
  if (order < 1) throw InvalidArgument("perturbation order must be at least 1");
  HankelProblem problem{potential, geometry, options.ansatz, options.dimension, options.offset, Unknown::energy,
                        v0_base};
  problem.validate();
  if (!hankel_eval_exact(problem, Rational(0)).is_zero())
    throw InvalidArgument("v0 = " + v0_base.to_string() + " is not an exact root of the E = 0 determinant at D = " +
                          std::to_string(options.dimension));

  std::vector<PerturbationSeries> out;
  int id = 0;
  for (auto& b : expand(problem, v0_base, order)) {
    PerturbationSeries s;
    s.potential = potential;
    s.geometry = geometry;
    s.n = ladder_index(potential, v0_base);
    s.v0_base = v0_base;
    s.coeffs = std::move(b.coeffs);
    s.defining_polynomial = std::move(b.defining);
    s.branch_id = ++id;
    s.dimension = options.dimension;
    out.push_back(std::move(s));
  }
  if (!options.stability_scan) return out;

  // Branch coefficient lists at each smaller dimension and at D + 1.
  std::vector<std::vector<std::vector<Rational>>> at(static_cast<std::size_t>(options.dimension) + 2);
  for (int d = 1; d <= options.dimension + 1; ++d) {
    if (d == options.dimension) {
      for (const auto& s : out) at[static_cast<std::size_t>(d)].push_back(s.coeffs);
      continue;
    }
    try {
      HankelProblem p = problem.with_dimension(d);
      if (!hankel_eval_exact(p, Rational(0)).is_zero()) continue;
      for (auto& b : expand(p, v0_base, order)) at[static_cast<std::size_t>(d)].push_back(std::move(b.coeffs));
    } catch (const Error&) {
    }
  }
  auto has = [&](int d, const std::vector<Rational>& c) {
    const auto& v = at[static_cast<std::size_t>(d)];
    return std::find(v.begin(), v.end(), c) != v.end();
  };
  for (auto& s : out) {
    if (!has(options.dimension + 1, s.coeffs)) continue;
    int from = options.dimension;
    while (from > 1 && has(from - 1, s.coeffs)) --from;
    s.stable_from = from;
  }
  return out;
}

std::string to_string(SlopeCheck c) {
  return c == SlopeCheck::consistent ? "consistent" : "violates_hellmann_feynman";
}

SlopeCheck slope_sign_check(const PerturbationSeries& series) {
  if (series.coeffs.empty()) throw InvalidArgument("series has no coefficients");
  return series.coeffs.front().sign() > 0 ? SlopeCheck::violates_hellmann_feynman : SlopeCheck::consistent;
}

}  // namespace rpm
