#include "rpm/solver.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace rpm {

std::string to_string(SequenceStatus s) {
  switch (s) {
    case SequenceStatus::converged: return "converged";
    case SequenceStatus::drifting: return "drifting";
    case SequenceStatus::lost: return "lost";
  }
  return "lost";
}

std::optional<BigReal> EigenBracket::width() const {
  if (!lower || !upper) return std::nullopt;
  return abs(*upper - *lower);
}

namespace {

BigReal scale_of(const BigReal& x) {
  BigReal one(1L, x.digits());
  BigReal a = abs(x);
  return a > one ? a : one;
}

BigReal tiny(int exponent, int digits) { return pow10(exponent, digits); }

// Closest continued-fraction convergent of x with denominator <= qmax that
// lies within tol of x.
std::optional<Rational> snap_rational(const BigReal& x, long qmax, const BigReal& tol) {
  const Rational exact = x.to_rational();
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class num = exact.numerator(), den = exact.denominator();
  for (int it = 0; it < 80 && den != 0; ++it) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > qmax) break;
    Rational c(p2, q2);
    if (abs(BigReal(c, x.digits()) - x) <= tol) return c;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  return std::nullopt;
}

std::optional<BigReal> try_value(const HankelEvaluator& ev, const BigReal& x) {
  try {
    return ev.value(x);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Bisection/Newton hybrid: Newton steps that stay inside the bracket are
// taken, anything else bisects.
BigReal refine_bracketed(const HankelEvaluator& ev, BigReal lo, BigReal hi, const SolverOptions& options,
                         int digits) {
  lo = lo.with_digits(digits);
  hi = hi.with_digits(digits);
  auto flo = try_value(ev, lo);
  auto fhi = try_value(ev, hi);
  if (!flo || !fhi) throw RootLost("determinant undefined at a bracket end");
  if (flo->is_zero()) return lo;
  if (fhi->is_zero()) return hi;
  if (flo->sign() == fhi->sign()) throw RootLost("bracket does not change sign");
  const int slo = flo->sign();
  BigReal x = (lo + hi) / Rational(2);
  const BigReal tol = tiny(-digits + 5, digits) * scale_of(x);
  const BigReal accept = tiny(-digits / 4, digits) * scale_of(x);
  BigReal prev_width = abs(hi - lo);
  // Bisection alone needs ~3.3 steps per digit; past the budget a bracket
  // already below 10^(-digits/4) is taken as the root.
  const int limit = options.max_newton + 200;
  for (int it = 0; it < limit; ++it) {
    DualReal h;
    try {
      h = ev.eval(DualReal::variable(x));
    } catch (const Error&) {
      x = (lo + hi) / Rational(2);
      continue;
    }
    if (h.value.is_zero()) return x;
    if (h.value.sign() == slo)
      lo = x;
    else
      hi = x;
    BigReal width = abs(hi - lo);
    if (width < tol) return (lo + hi) / Rational(2);
    bool newton_ok = !h.deriv.is_zero();
    BigReal xn = x;
    if (newton_ok) {
      const BigReal dx = h.value / h.deriv;
      xn = x - dx;
      newton_ok = xn > lo && xn < hi;
      if (newton_ok && abs(dx) < tol) return xn;
      // Newton that fails to halve the bracket over two steps is too slow.
      if (newton_ok && width > prev_width / Rational(2) && it % 2 == 1) newton_ok = false;
    }
    prev_width = width;
    x = newton_ok ? xn : (lo + hi) / Rational(2);
  }
  if (abs(hi - lo) < accept) return (lo + hi) / Rational(2);
  throw RootLost("bracketed refinement did not converge");
}

// Newton iteration; with `deflate` the known roots are divided out
// implicitly (Maehly): dx = 1 / (H'/H - sum 1/(x - r_i)).
std::optional<BigReal> newton_run(const HankelEvaluator& ev, const BigReal& seed, const SolverOptions& options,
                                  int digits, const std::vector<BigReal>* deflate, bool accelerate) {
  BigReal x = seed.with_digits(digits);
  const BigReal scale = scale_of(x);
  const BigReal tol = tiny(-digits + 5, digits) * scale;
  const BigReal accept = tiny(-digits / 4, digits) * scale;
  BigReal best_dx(0L, digits);
  BigReal best_x = x;
  bool have_best = false;
  int stall = 0;
  BigReal prev_dx(0L, digits);
  bool have_prev = false;
  long prev_m = 1;
  // state before an accelerated step, to undo it if |H| grew
  std::optional<BigReal> undo_x, undo_dx;
  BigReal undo_h;
  for (int it = 0; it < options.max_newton; ++it) {
    DualReal h;
    try {
      h = ev.eval(DualReal::variable(x));
    } catch (const Error&) {
      return std::nullopt;
    }
    if (h.value.is_zero()) return x;
    if (undo_x) {
      if (abs(h.value) > undo_h) {
        x = *undo_x - *undo_dx;
        accelerate = false;
        undo_x.reset();
        continue;
      }
      undo_x.reset();
    }
    BigReal dx;
    if (deflate && !deflate->empty()) {
      BigReal denom = h.deriv / h.value;
      for (const auto& r : *deflate) {
        const BigReal gap = x - r;
        if (gap.is_zero()) return std::nullopt;
        denom -= BigReal(1L, digits) / gap;
      }
      if (denom.is_zero()) return std::nullopt;
      dx = BigReal(1L, digits) / denom;
    } else {
      if (h.deriv.is_zero()) return std::nullopt;
      dx = h.value / h.deriv;
    }
    BigReal adx = abs(dx);
    // Steps shrinking by a steady ratio q signal a root cluster of
    // multiplicity m = 1 / (1 - q); stepping m times as far restores fast
    // convergence.
    if (have_prev && prev_dx.sign() == dx.sign() && !prev_dx.is_zero()) {
      const double q = (dx / prev_dx).to_double();
      const long m = q > 0.4 && q < 0.98 ? std::lround(1.0 / (1.0 - q)) : 1;
      if (accelerate && m >= 2 && m == prev_m) {
        undo_x = x;
        undo_dx = dx;
        undo_h = abs(h.value);
        dx *= Rational(m);
        adx = abs(dx);
      }
      prev_m = m;
    }
    prev_dx = dx;
    have_prev = true;
    x -= dx;
    if (!x.is_finite()) return std::nullopt;
    if (adx < tol) return x;
    if (!have_best || adx < best_dx) {
      best_dx = adx;
      best_x = x;
      have_best = true;
      stall = 0;
    } else if (++stall >= 3) {
      // Rounding noise floor: the step no longer shrinks.
      if (best_dx < accept) return best_x;
      return std::nullopt;
    }
  }
  if (have_best && best_dx < accept) return best_x;
  return std::nullopt;
}

// Multiplicity steps can overshoot inside a tight cluster; plain Newton is
// the fallback.
std::optional<BigReal> newton(const HankelEvaluator& ev, const BigReal& seed, const SolverOptions& options,
                              int digits, const std::vector<BigReal>* deflate = nullptr) {
  if (auto r = newton_run(ev, seed, options, digits, deflate, true)) return r;
  return newton_run(ev, seed, options, digits, deflate, false);
}

// Search outward from the seed for a sign change within radius.
std::optional<Bracket> local_bracket(const HankelEvaluator& ev, const BigReal& seed, const BigReal& radius) {
  auto f0 = try_value(ev, seed);
  if (!f0) return std::nullopt;
  if (f0->is_zero()) return Bracket{seed, seed};
  for (int k = 8; k >= 0; --k) {
    const BigReal r = radius / Rational(1L << k);
    for (int sgn : {-1, 1}) {
      const BigReal x = sgn < 0 ? seed - r : seed + r;
      auto f = try_value(ev, x);
      if (f && (f->is_zero() || f->sign() != f0->sign()))
        return sgn < 0 ? Bracket{x, seed} : Bracket{seed, x};
    }
  }
  return std::nullopt;
}

BigReal snap(const HankelEvaluator& ev, const BigReal& x, int digits) {
  auto q = snap_rational(x, 1000000, tiny(-digits / 2, digits) * scale_of(x));
  if (!q) return x;
  try {
    if (ev.exact(*q).is_zero()) return BigReal(*q, digits);
  } catch (const Error&) {
  }
  return x;
}

BigReal refine_with(const HankelEvaluator& ev, const BigReal& seed, const SolverOptions& options, int digits,
                    const std::optional<Bracket>& bracket, bool search_locally = true) {
  BigReal root;
  if (bracket) {
    root = refine_bracketed(ev, bracket->lo, bracket->hi, options, digits);
  } else if (auto r = newton(ev, seed, options, digits)) {
    root = *r;
  } else {
    if (!search_locally) throw RootLost("Newton did not converge from " + seed.to_string(12));
    const BigReal s = seed.with_digits(digits);
    auto b = local_bracket(ev, s, scale_of(s) * BigReal(options.max_jump, digits));
    if (!b) throw RootLost("no root near " + seed.to_string(12));
    root = b->lo == b->hi ? b->lo : refine_bracketed(ev, b->lo, b->hi, options, digits);
  }
  return snap(ev, root, digits);
}

struct Sample {
  BigReal x;
  std::optional<DualReal> h;
};

// Roots in [lo, hi]. Sign changes of H are refined inside their cell; in
// addition every grid point whose Newton step H/H' is shorter than two cells
// seeds a Newton run, which catches clusters of roots closer than the grid
// spacing (H keeps its sign across such a pair).
std::vector<BigReal> find_roots(const HankelEvaluator& ev, const BigReal& lo, const BigReal& hi,
                                const SolverOptions& options, int digits) {
  const int n = std::max(options.grid_points, 4);
  std::vector<Sample> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  const BigReal step = (hi - lo) / Rational(n);
  for (int i = 0; i <= n; ++i) {
    BigReal x = lo.with_digits(digits) + step * Rational(i);
    Sample smp{x, std::nullopt};
    try {
      smp.h = ev.eval(DualReal::variable(x));
    } catch (const Error&) {
    }
    grid.push_back(std::move(smp));
  }
  std::vector<BigReal> roots;
  auto add = [&](const BigReal& r) {
    if (r < lo || r > hi) return;
    const BigReal sep = tiny(-digits / 3, digits) * scale_of(r);
    for (const auto& e : roots)
      if (abs(e - r) < sep) return;
    roots.push_back(r);
  };
  for (int i = 0; i < n; ++i) {
    const auto& a = grid[static_cast<std::size_t>(i)];
    const auto& b = grid[static_cast<std::size_t>(i) + 1];
    if (!a.h || !b.h) continue;
    if (a.h->value.is_zero()) {
      add(a.x);
      continue;
    }
    if (a.h->value.sign() != b.h->value.sign() && !b.h->value.is_zero()) {
      try {
        add(refine_with(ev, a.x, options, digits, Bracket{a.x, b.x}));
      } catch (const RootLost&) {
      }
    }
  }
  if (grid.back().h && grid.back().h->value.is_zero()) add(grid.back().x);
  // Roots sharing a cluster are peeled off one at a time from the same seed
  // by deflating the ones already known.
  const BigReal reach = abs(step) * Rational(2);
  for (int i = 0; i <= n; ++i) {
    const auto& m = grid[static_cast<std::size_t>(i)];
    if (!m.h || m.h->value.is_zero() || m.h->deriv.is_zero()) continue;
    if (!(abs(m.h->value / m.h->deriv) < reach)) continue;
    for (int extra = 0; extra < 6; ++extra) {
      auto r = newton(ev, m.x, options, digits, &roots);
      if (!r || abs(*r - m.x) > reach) break;
      const std::size_t before = roots.size();
      add(snap(ev, *r, digits));
      if (roots.size() == before) break;
    }
  }
  // The same from both sides of every root found so far.
  for (std::size_t k = 0; k < roots.size() && k < 64; ++k) {
    const BigReal r0 = roots[k];
    for (int e : {-6, -3}) {
      for (int sgn : {-1, 1}) {
        BigReal seed = r0 + scale_of(r0) * tiny(e, digits) * Rational(sgn);
        auto r = newton(ev, seed, options, digits, &roots);
        if (r && abs(*r - r0) <= reach) add(snap(ev, *r, digits));
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const BigReal& x, const BigReal& y) { return x < y; });
  return roots;
}

bool plausible(const RootSequence& s) {
  return s.status == SequenceStatus::converged ||
         (s.status == SequenceStatus::drifting && s.est_correct_digits >= 6);
}

SolverOptions fixed_digits(SolverOptions o, int digits) {
  o.digits = digits;
  return o;
}

}  // namespace

void classify(RootSequence& seq, int target_digits) {
  seq.converged.reset();
  seq.est_correct_digits = 0;
  if (seq.entries.empty()) {
    seq.status = SequenceStatus::lost;
    return;
  }
  if (seq.entries.size() < 2) {
    seq.status = SequenceStatus::drifting;
    return;
  }
  std::vector<BigReal> deltas;
  for (std::size_t i = 1; i < seq.entries.size(); ++i)
    deltas.push_back(abs(seq.entries[i].root - seq.entries[i - 1].root));
  const BigReal& last = deltas.back();
  const int digits = seq.digits > 0 ? seq.digits : seq.entries.back().root.digits();
  if (last.is_zero()) {
    seq.est_correct_digits = digits;
  } else {
    const double lg = log10(last).to_double();
    seq.est_correct_digits = std::clamp(static_cast<int>(std::floor(-lg)), 0, digits);
  }
  // the tracker stops once two dimensions give the same root to half the
  // working precision; such a run is settled however short it is
  const BigReal settled = pow10(-digits / 2, digits) * scale_of(seq.entries.back().root);
  bool ok = deltas.size() >= 3 || last <= settled;
  for (std::size_t i = deltas.size() >= 3 ? deltas.size() - 3 : 0; ok && i + 1 < deltas.size(); ++i)
    if (deltas[i + 1] > deltas[i]) ok = false;
  if (ok && last < pow10(-target_digits, digits)) {
    seq.status = SequenceStatus::converged;
    seq.converged = seq.entries.back().root;
  } else {
    seq.status = SequenceStatus::drifting;
  }
}

std::vector<Bracket> scan_sign_changes(const HankelProblem& problem, const BigReal& lo, const BigReal& hi,
                                       int grid_points) {
  if (!(lo < hi)) throw InvalidArgument("empty scan range");
  if (grid_points < 2) throw InvalidArgument("at least two grid points are needed");
  HankelEvaluator ev(problem);
  const int digits = std::max(lo.digits(), auto_digits(problem.dimension));
  const int n = std::max(grid_points, 1);
  const BigReal step = (hi.with_digits(digits) - lo) / Rational(n);
  std::vector<Bracket> out;
  std::optional<BigReal> px, pf;
  for (int i = 0; i <= n; ++i) {
    BigReal x = lo.with_digits(digits) + step * Rational(i);
    auto f = try_value(ev, x);
    if (!f) {
      px.reset();
      pf.reset();
      continue;
    }
    if (pf && (f->is_zero() || f->sign() != pf->sign()) && !pf->is_zero()) out.push_back({*px, x});
    px = x;
    pf = f;
  }
  return out;
}

std::vector<BigReal> find_roots(const HankelProblem& problem, const BigReal& lo, const BigReal& hi,
                                const SolverOptions& options) {
  if (!(lo < hi)) throw InvalidArgument("empty search range");
  HankelEvaluator ev(problem);
  const int digits = options.digits_for(problem.dimension);
  return find_roots(ev, lo.with_digits(digits), hi.with_digits(digits), fixed_digits(options, digits), digits);
}

BigReal refine_root(const HankelProblem& problem, const BigReal& seed, const SolverOptions& options,
                    const std::optional<Bracket>& bracket) {
  HankelEvaluator ev(problem);
  return refine_with(ev, seed, options, options.digits_for(problem.dimension), bracket);
}

namespace {

using Registry = std::vector<std::vector<RootEntry>>;

// Shared by the public tracker and the critical scan; when `known` is given
// the run is abandoned (nullopt) as soon as it lands on a root another
// sequence already holds at the same dimension.
std::optional<RootSequence> track_impl(const HankelProblem& family, const BigReal& seed, int d_from, int d_to,
                                       const SolverOptions& options, const Registry* known) {
  if (std::min(d_from, d_to) < 1) throw InvalidArgument("dimensions must be at least 1");
  RootSequence seq;
  seq.problem = family;
  seq.digits = options.digits_for(std::max(d_from, d_to));
  const int step = std::max(1, options.dimension_step) * (d_to >= d_from ? 1 : -1);
  BigReal x = seed.with_digits(seq.digits);
  const BigReal same = pow10(-seq.digits / 2, seq.digits);
  int misses = 0;
  bool lost = false;
  std::vector<BigReal> cluster;  // roots near the sequence at the last dimension
  for (int d = d_from; step > 0 ? d <= d_to : d >= d_to; d += step) {
    bool found = false;
    try {
      HankelEvaluator ev(family.with_dimension(d));
      BigReal r = refine_with(ev, x, options, seq.digits, std::nullopt);
      BigReal bound = scale_of(x) * BigReal(options.max_jump, seq.digits);
      // A converging sequence may not leap far beyond its last step: at
      // some dimensions the nearest root belongs to a neighbouring cluster.
      if (seq.entries.size() >= 2) {
        const BigReal last = abs(seq.entries.back().root - seq.entries[seq.entries.size() - 2].root);
        BigReal adaptive = last * Rational(1000);
        const BigReal floor = pow10(-seq.digits / 4, seq.digits) * scale_of(x);
        if (adaptive < floor) adaptive = floor;
        if (adaptive < bound) bound = adaptive;
      }
      // Roots of the Hankel condition come in clusters, and the member that
      // converges is not always the one nearest the previous root. Deflation
      // from the previous root uncovers the neighbours; the member closest to
      // any member of the previous cluster wins.
      if (seq.entries.size() >= 2 && abs(r - x) <= bound && abs(r - x) > pow10(-seq.digits / 4, seq.digits) * scale_of(x)) {
        std::vector<BigReal> members{r};
        for (int extra = 0; extra < 3; ++extra) {
          auto c = newton(ev, x, options, seq.digits, &members);
          if (!c || abs(*c - x) > bound) break;
          members.push_back(*c);
        }
        auto gap = [&](const BigReal& m) {
          BigReal g = abs(m - x);
          for (const auto& p : cluster)
            if (abs(m - p) < g) g = abs(m - p);
          return g;
        };
        BigReal best = gap(r);
        for (const auto& m : members)
          if (const BigReal g = gap(m); g < best) {
            best = g;
            r = m;
          }
        cluster = std::move(members);
      } else {
        cluster = {r};
      }
      if (abs(r - x) <= bound) {
        if (known)
          for (const auto& other : *known)
            for (const auto& e : other)
              if (e.dimension == d && abs(e.root - r) <= same * scale_of(r)) return std::nullopt;
        seq.entries.push_back({d, r});
        x = r;
        found = true;
        // The same root at two dimensions to working precision: settled.
        if (seq.entries.size() >= 2 && abs(seq.entries[seq.entries.size() - 2].root - r) <= same * scale_of(r)) {
          misses = 0;
          break;
        }
      }
    } catch (const Error&) {
    }
    if (found) {
      misses = 0;
    } else {
      seq.missing.push_back(d);
      // Once a sequence is converging, keep probing: the root it follows can
      // be absent at a run of dimensions and reappear.
      if (++misses > options.max_misses && seq.entries.size() < 3) {
        lost = true;
        break;
      }
    }
  }
  std::sort(seq.entries.begin(), seq.entries.end(),
            [](const RootEntry& a, const RootEntry& b) { return a.dimension < b.dimension; });
  std::sort(seq.missing.begin(), seq.missing.end());
  classify(seq, options.target_digits);
  if (lost) seq.status = SequenceStatus::lost;
  return seq;
}

}  // namespace

RootSequence track_sequence(const HankelProblem& family, const BigReal& seed, int d_from, int d_to,
                            const SolverOptions& options) {
  return *track_impl(family, seed, d_from, d_to, options, nullptr);
}

std::vector<LabeledSequence> critical_parameters(const PotentialSpec& potential, const Geometry& geometry,
                                                 Ansatz ansatz, int n_max, int d_max,
                                                 const SolverOptions& options, int offset) {
  if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
  HankelProblem family{potential, geometry, ansatz, d_max, offset, Unknown::depth, Rational(0)};
  family.validate();
  const int digits = options.digits_for(d_max);
  const SolverOptions opts = fixed_digits(options, digits);
  const int d_scan = options.scan_for(d_max);
  HankelEvaluator ev(family.with_dimension(d_scan));

  std::vector<RootSequence> found;
  std::vector<RootSequence> stragglers;
  Registry registry;
  int count = 0;
  BigReal lo(0L, digits), hi(2L, digits);
  const BigReal cap(1000000L, digits);
  // v0 = 0 annihilates every determinant at E = 0; roots drifting toward it
  // are not critical parameters.
  const BigReal floor_v0 = pow10(-6, digits);
  while (count < n_max && lo < cap) {
    for (const BigReal& r : find_roots(ev, lo, hi, opts, digits)) {
      if (r <= floor_v0) continue;
      auto tracked = track_impl(family, r, d_scan, d_max, opts, &registry);
      if (!tracked || tracked->empty() || tracked->value() <= floor_v0) continue;
      RootSequence seq = std::move(*tracked);
      if (!plausible(seq)) {
        stragglers.push_back(std::move(seq));
        continue;
      }
      bool dup = false;
      for (const auto& f : found) {
        const int est = std::max(1, std::min(f.est_correct_digits, seq.est_correct_digits));
        if (abs(f.value() - seq.value()) < pow10(-est, digits) * scale_of(seq.value())) dup = true;
      }
      if (dup) continue;
      registry.push_back(seq.entries);
      ++count;
      found.push_back(std::move(seq));
    }
    lo = hi;
    hi = hi * Rational(2);
  }
  std::sort(found.begin(), found.end(),
            [](const RootSequence& a, const RootSequence& b) { return a.value() < b.value(); });
  std::vector<LabeledSequence> out;
  int n = 0;
  for (auto& s : found)
    if (n < n_max) out.push_back({++n, std::move(s)});
  if (n < n_max) {
    std::sort(stragglers.begin(), stragglers.end(), [](const RootSequence& a, const RootSequence& b) {
      return a.empty() || (!b.empty() && a.value() < b.value());
    });
    for (auto& s : stragglers) out.push_back({0, std::move(s)});
  }
  return out;
}

EigenBracket eigenvalue_bracket(const PotentialSpec& potential, const Geometry& geometry, const Rational& v0,
                                int n, int d_max, const SolverOptions& options) {
  if (n < 0) throw InvalidArgument("state index must be non-negative");
  int k = n;
  if (geometry.kind == GeometryKind::parity_1d) {
    if (n % 2 != geometry.s)
      throw InvalidArgument("state " + std::to_string(n) + " does not have parity s=" + std::to_string(geometry.s));
    k = n / 2;
  }
  if (geometry.kind == GeometryKind::parity_1d) {
    std::optional<Rational> crit;
    if (potential.family == Family::poschl_teller) crit = mpt_critical(n);
    if (potential.family == Family::rational && potential.exponent == Rational(2)) crit = Rational(n * (n + 2), 2);
    if (crit && v0 <= *crit)
      throw StateNotBound("state " + std::to_string(n) + " is not bound at v0 = " + v0.to_string() +
                          " (threshold " + crit->to_string() + ")");
  }
  if (v0.sign() <= 0) throw StateNotBound("no bound states for v0 <= 0");

  const int digits = options.digits_for(d_max);
  const SolverOptions opts = fixed_digits(options, digits);
  const int d_scan = options.scan_for(d_max);
  HankelProblem family{potential, geometry, Ansatz::f, d_scan, 0, Unknown::energy, v0};
  family.validate();

  const BigReal depth(v0, digits);
  BigReal lo = -depth;
  if (potential.family == Family::yukawa) lo = -(depth * depth / Rational(2) + depth);
  const BigReal hi = -pow10(-12, digits);

  std::vector<BigReal> candidates;
  {
    HankelEvaluator ev(family);
    SolverOptions scan = opts;
    scan.grid_points = std::max(options.grid_points, 256);
    for (const BigReal& r : find_roots(ev, lo, hi, scan, digits)) {
      RootSequence probe = track_sequence(family, r, d_scan, std::min(d_max, d_scan + 4), opts);
      if (probe.status != SequenceStatus::lost && probe.entries.size() >= 4 && probe.est_correct_digits >= 2)
        candidates.push_back(r);
    }
  }

  EigenBracket out;
  out.n = n;
  if (static_cast<int>(candidates.size()) <= k) {
    out.partial = true;
    return out;
  }
  const BigReal seed = candidates[static_cast<std::size_t>(k)];
  out.upper_sequence = track_sequence(family, seed, d_scan, d_max, opts);
  out.lower_sequence = track_sequence(family.with_offset(1), seed, d_scan, d_max, opts);
  if (!out.upper_sequence.empty()) out.upper = out.upper_sequence.last();
  if (!out.lower_sequence.empty()) out.lower = out.lower_sequence.last();
  out.partial = out.upper_sequence.status == SequenceStatus::lost ||
                out.lower_sequence.status == SequenceStatus::lost || !out.lower || !out.upper ||
                *out.lower > *out.upper;
  return out;
}

std::vector<LabeledRoot> spurious_scan(const PotentialSpec& potential, const Geometry& geometry,
                                       const Rational& v0, int dimension, int offset, const BigReal& lo,
                                       const BigReal& hi, const SolverOptions& options) {
  HankelProblem problem{potential, geometry, Ansatz::f, dimension, offset, Unknown::energy, v0};
  problem.validate();
  const int digits = options.digits_for(dimension);
  HankelEvaluator ev(problem);
  const auto refs = reference_energies(potential, geometry, v0, digits);
  std::vector<LabeledRoot> out;
  for (const BigReal& r : find_roots(ev, lo.with_digits(digits), hi.with_digits(digits),
                                     fixed_digits(options, digits), digits)) {
    LabeledRoot lr{r, RootLabel::unlabeled, ""};
    if (auto m = match_reference(r, refs)) {
      lr.label = m->label;
      lr.source = m->source;
    }
    out.push_back(std::move(lr));
  }
  return out;
}

}  // namespace rpm
