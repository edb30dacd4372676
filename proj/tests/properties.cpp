#include "properties.hpp"

#include <functional>
#include <sstream>

#include "rpm/errors.hpp"

namespace rpm::props {

namespace {

std::vector<PotentialSpec> even_families(GeometryKind g) {
  return {PotentialSpec::gaussian(g), PotentialSpec::poschl_teller(g), PotentialSpec::rational_m(Rational(2), g),
          PotentialSpec::rational_m(Rational(5, 2), g)};
}

XiSeries series_of(const std::vector<Rational>& c, int order) { return XiSeries(c, order); }

// t * s, truncated.
XiSeries times_t(const XiSeries& s) {
  std::vector<Rational> c(static_cast<std::size_t>(s.order()) + 1);
  for (int k = 0; k < s.order(); ++k) c[static_cast<std::size_t>(k) + 1] = s[k];
  return XiSeries(c, s.order());
}

// d/dt, truncated to the same order (the top coefficient is lost).
XiSeries derivative(const XiSeries& s) {
  std::vector<Rational> c(static_cast<std::size_t>(s.order()) + 1);
  for (int k = 1; k <= s.order(); ++k) c[static_cast<std::size_t>(k) - 1] = s[k] * Rational(k);
  return XiSeries(c, s.order());
}

std::string first_nonzero(const XiSeries& r, int upto, const std::string& what) {
  for (int k = 0; k <= upto && k <= r.order(); ++k)
    if (!r[k].is_zero()) return what + ": residual order " + std::to_string(k) + " = " + r[k].to_string();
  return {};
}

std::vector<Rational> q_list(const QCoeffs<Rational>& q, int from, int to) {
  std::vector<Rational> out;
  for (int j = from; j <= to; ++j) out.push_back(q.at(j, Rational(0)));
  return out;
}

// Q as a series in r with the 1/r term stripped: coefficient j is Q_{j-1}.
XiSeries r_times_q(const QCoeffs<Rational>& q, int order) { return series_of(q_list(q, -1, order - 1), order); }

}  // namespace

Rational random_rational(std::mt19937_64& rng, long range, long den) {
  std::uniform_int_distribution<long> p(-range, range), q(1, den);
  return Rational(p(rng), q(rng));
}

std::string riccati_defect(int trials, unsigned seed) {
  std::mt19937_64 rng(seed);
  const int K = 10;
  for (int t = 0; t < trials; ++t) {
    const Rational e = random_rational(rng), v0 = random_rational(rng);
    for (const auto& p : even_families(GeometryKind::parity_1d))
      for (int s = 0; s <= 1; ++s) {
        const auto q = q_coeffs(p, e, v0, K);
        const auto f = f_parity(q, s, K);
        const XiSeries F = series_of(f.coeffs, K), Q = series_of(q.coeffs, K);
        // f' + 2s f / x - f^2 - Q with f = x F(x^2)
        const XiSeries r = F + times_t(derivative(F)) * Rational(2) + F * Rational(2 * s) - times_t(F * F) - Q;
        if (auto m = first_nonzero(r, K - 1, p.name() + " s=" + std::to_string(s)); !m.empty()) return m;
      }
    std::vector<PotentialSpec> central = even_families(GeometryKind::central_field);
    central.push_back(PotentialSpec::yukawa());
    for (const auto& p : central)
      for (int l = 0; l <= 3; ++l) {
        const auto q = q_coeffs(p, e, v0, K);
        const auto f = f_central(q, l, K, Rational(0));
        const XiSeries F = series_of(f.coeffs, K);
        // r (f' + 2(l+1) f / r - f^2 - Q)
        const XiSeries r = times_t(derivative(F)) + F * Rational(2 * (l + 1)) - times_t(F * F) - r_times_q(q, K);
        if (auto m = first_nonzero(r, K - 1, p.name() + " l=" + std::to_string(l)); !m.empty()) return m;
      }
  }
  return {};
}

std::string g_relation(int trials, unsigned seed) {
  std::mt19937_64 rng(seed);
  const int K = 10;
  for (int t = 0; t < trials; ++t) {
    const Rational e = random_rational(rng), v0 = random_rational(rng);
    for (const auto& p : even_families(GeometryKind::parity_1d))
      for (int s = 0; s <= 1; ++s) {
        const auto q = q_coeffs(p, e, v0, K + 1);
        const auto f = f_parity(q, s, K + 1);
        if (s == 0 && f[0].is_zero()) continue;
        const auto g = g_parity(q, f, s, K);
        const XiSeries F = series_of(f.coeffs, K), G = series_of(g.coeffs, K), Q = series_of(q.coeffs, K);
        // (1-s) f / x - f g + s g / x = Q with f = x F, g = x G
        const XiSeries r = F * Rational(1 - s) - times_t(F * G) + G * Rational(s) - Q;
        if (auto m = first_nonzero(r, K - 1, "g " + p.name() + " s=" + std::to_string(s)); !m.empty()) return m;
      }
    std::vector<PotentialSpec> central = even_families(GeometryKind::central_field);
    central.push_back(PotentialSpec::yukawa());
    for (const auto& p : central)
      for (int l = 0; l <= 3; ++l) {
        const auto q = q_coeffs(p, e, v0, K);
        const auto f = f_central(q, l, K, Rational(0));
        const auto g = g_central(q, f, l, K, Rational(0));
        const XiSeries F = series_of(f.coeffs, K), G = series_of(g.coeffs, K);
        // r ((l+1) g / r - f g + l f / r - Q)
        const XiSeries r = G * Rational(l + 1) - times_t(F * G) + F * Rational(l) - r_times_q(q, K);
        if (auto m = first_nonzero(r, K - 1, "g " + p.name() + " l=" + std::to_string(l)); !m.empty()) return m;
      }
  }
  return {};
}

std::string dual_vs_difference(int trials, unsigned seed) {
  std::mt19937_64 rng(seed);
  const int digits = 60;
  const BigReal h = pow10(-digits / 2, digits);
  const BigReal tol = pow10(-digits / 3, digits);
  std::uniform_int_distribution<int> op(0, 3), pick(0, 1);
  int done = 0;
  for (int guard = 0; done < trials && guard < 20 * trials; ++guard) {
    const BigReal x0 = BigReal(random_rational(rng, 20, 9), digits);
    std::vector<std::pair<int, int>> ops;
    std::vector<Rational> consts;
    for (int k = 0; k < 6; ++k) {
      ops.emplace_back(op(rng), pick(rng));
      Rational c = random_rational(rng);
      if (c.is_zero()) c = Rational(1, 3);
      consts.push_back(c);
    }
    bool tiny_divisor = false;
    auto run = [&](auto x) {
      using T = decltype(x);
      T v = x;
      for (std::size_t k = 0; k < ops.size(); ++k) {
        T other = ops[k].second ? x : lift(consts[k], x);
        if (ops[k].second) other += consts[k];
        switch (ops[k].first) {
          case 0: v += other; break;
          case 1: v -= other; break;
          case 2: v *= other; break;
          default: {
            BigReal mag;
            if constexpr (std::is_same_v<T, DualReal>) mag = abs(other.value);
            else mag = abs(other);
            if (mag < BigReal(0.001, digits)) tiny_divisor = true;
            v /= other;
          }
        }
      }
      return v;
    };
    DualReal d;
    try {
      d = run(DualReal::variable(x0));
    } catch (const DivisionByZero&) {
      continue;
    }
    if (tiny_divisor) continue;
    const BigReal fd = (run(x0 + h) - run(x0 - h)) / Rational(2);
    const BigReal slope = fd / h;
    const BigReal scale = abs(d.deriv) > BigReal(1L, digits) ? abs(d.deriv) : BigReal(1L, digits);
    if (abs(slope - d.deriv) > tol * scale) {
      std::ostringstream os;
      os << "pipeline " << done << ": dual " << d.deriv.to_string(20) << " vs difference " << slope.to_string(20);
      return os.str();
    }
    ++done;
  }
  if (done < trials) return "too few usable random pipelines";

  // Hankel determinants, unknown energy or depth.
  for (int t = 0; t < trials / 10 + 1; ++t) {
    std::uniform_int_distribution<int> dim(1, 5), sp(0, 1);
    const int s = sp(rng);
    HankelProblem p{PotentialSpec::rational_m(Rational(2)), Geometry::parity(s), Ansatz::f, dim(rng), sp(rng),
                    sp(rng) ? Unknown::energy : Unknown::depth, random_rational(rng, 5, 3)};
    const BigReal x0(random_rational(rng, 5, 7), digits);
    const DualReal d = hankel_eval(p, DualReal::variable(x0));
    const BigReal slope = (hankel_value(p, x0 + h) - hankel_value(p, x0 - h)) / Rational(2) / h;
    const BigReal scale = abs(d.deriv) > BigReal(1L, digits) ? abs(d.deriv) : BigReal(1L, digits);
    if (abs(slope - d.deriv) > tol * scale) return "hankel derivative mismatch for " + p.describe();
  }
  return {};
}

namespace {

// Exact solve by Gauss-Jordan; throws on a singular system.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw DivisionByZero("singular system");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational m = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
      b[r] -= m * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

// Laplace expansion along the first row.
Rational cofactor_det(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const Rational term = a[0][j] * cofactor_det(minor);
    sum += j % 2 ? -term : term;
  }
  return sum;
}

}  // namespace

std::string pade_hankel(int trials, unsigned seed) {
  std::mt19937_64 rng(seed);
  for (int N = 1; N <= 3; ++N)
    for (int d = 0; d <= 1; ++d) {
      int sign = 0;
      for (int t = 0; t < trials; ++t) {
        const int s = t % 2;
        const Rational e = random_rational(rng), v0 = random_rational(rng);
        const int count = 2 * N + d + 2;
        const auto q = q_coeffs(PotentialSpec::rational_m(Rational(2)), e, v0, count);
        const std::vector<Rational> c = f_parity(q, s, count).coeffs;
        const int L = N + d;
        // sum_{k=0}^{N} b_k c_{L+m-k} = 0, m = 1..N, b_0 = 1
        std::vector<std::vector<Rational>> a(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N)));
        std::vector<Rational> rhs(static_cast<std::size_t>(N));
        for (int m = 1; m <= N; ++m) {
          for (int k = 1; k <= N; ++k) a[m - 1][k - 1] = c[static_cast<std::size_t>(L + m - k)];
          rhs[m - 1] = -c[static_cast<std::size_t>(L + m)];
        }
        const Rational det_a = cofactor_det(a);
        if (det_a.is_zero()) continue;
        const Rational bN = solve(a, rhs)[static_cast<std::size_t>(N) - 1];
        const Rational h = determinant(hankel_matrix(c, N, d + 1));
        if (h.is_zero() != bN.is_zero())
          return "Pade N=" + std::to_string(N) + " d=" + std::to_string(d) + ": zero pattern differs";
        if (h.is_zero()) continue;
        const Rational ratio = bN * det_a / h;
        if (ratio != Rational(1) && ratio != Rational(-1))
          return "Pade N=" + std::to_string(N) + " d=" + std::to_string(d) + ": b_N det A / H = " + ratio.to_string();
        const int sg = ratio.sign();
        if (sign == 0) sign = sg;
        if (sg != sign) return "Pade N=" + std::to_string(N) + " d=" + std::to_string(d) + ": sign not constant";
      }
    }
  return {};
}

std::string parity_central(int trials, unsigned seed) {
  std::mt19937_64 rng(seed);
  const int K = 8;
  for (int t = 0; t < trials; ++t) {
    const Rational e = random_rational(rng), v0 = random_rational(rng);
    const auto par = even_families(GeometryKind::parity_1d);
    const auto cen = even_families(GeometryKind::central_field);
    for (std::size_t i = 0; i < par.size(); ++i) {
      const auto qp = q_coeffs(par[i], e, v0, K);
      const auto qc = q_coeffs(cen[i], e, v0, 2 * K + 1);
      const auto fp = f_parity(qp, 1, K);
      const auto fc = f_central(qc, 0, 2 * K + 1, Rational(0));
      for (int j = 0; j <= K; ++j) {
        if (!fc[2 * j].is_zero()) return par[i].name() + ": even r-power in the l=0 f series";
        if (fc[2 * j + 1] != fp[j]) return par[i].name() + ": f_" + std::to_string(j) + " differs";
      }
      const auto gp = g_parity(qp, fp, 1, K);
      const auto gc = g_central(qc, fc, 0, 2 * K + 1, Rational(0));
      for (int j = 0; j <= K; ++j)
        if (gc[2 * j + 1] != gp[j]) return par[i].name() + ": g_" + std::to_string(j) + " differs";
      for (int D = 1; D <= 3; ++D)
        for (Ansatz a : {Ansatz::f, Ansatz::g}) {
          const HankelProblem hp{par[i], Geometry::parity(1), a, D, 0, Unknown::energy, v0};
          const HankelProblem hc{cen[i], Geometry::central(0), a, D, 0, Unknown::energy, v0};
          if (hankel_eval_exact(hp, e) != hankel_eval_exact(hc, e))
            return par[i].name() + ": determinants differ at D=" + std::to_string(D);
        }
    }
  }
  return {};
}

std::vector<Rational> log_derivative(const std::vector<Rational>& c, int count, long scale) {
  std::vector<Rational> num, out;
  for (int j = 0; j < count; ++j) num.push_back(c[static_cast<std::size_t>(j) + 1] * Rational(scale * (j + 1)));
  for (int j = 0; j < count; ++j) {
    Rational acc = num[static_cast<std::size_t>(j)];
    for (int i = 1; i <= j; ++i) acc -= c[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(j - i)];
    out.push_back(acc / c[0]);
  }
  for (auto& x : out) x = -x;
  return out;
}

std::vector<Rational> parity_wavefunction(const std::vector<Rational>& q, int s, int count) {
  // c_{m+1} (2m+s+2)(2m+s+1) = -sum_{k=0}^{m} Q_k c_{m-k}
  std::vector<Rational> c{Rational(1)};
  for (int m = 0; m + 1 < count; ++m) {
    Rational acc(0);
    for (int k = 0; k <= m; ++k) acc -= q[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - k)];
    c.push_back(acc / Rational((2 * m + s + 2) * (2 * m + s + 1)));
  }
  return c;
}

std::vector<Rational> radial_wavefunction(const std::vector<Rational>& q, int l, int count) {
  // m (m + 2l + 1) c_m = -sum_{k=-1}^{m-2} Q_k c_{m-2-k}
  std::vector<Rational> c{Rational(1)};
  for (int m = 1; m < count; ++m) {
    Rational acc(0);
    for (int k = -1; k <= m - 2; ++k) acc -= q[static_cast<std::size_t>(k + 1)] * c[static_cast<std::size_t>(m - 2 - k)];
    c.push_back(acc / Rational(m * (m + 2 * l + 1)));
  }
  return c;
}

}  // namespace rpm::props
