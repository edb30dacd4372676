#pragma once

// Taylor coefficients of the regularized logarithmic derivatives
//
//   f = s/x - psi'/psi,        g = (1-s)/x - psi''/psi'     (parity, s = 0, 1)
//   f = (l+1)/r - psi'/psi,    g = l/r - psi''/psi'         (central field)
//
// obtained by inserting the series into the Riccati equation
// f' + (2s/x) f - f^2 - Q = 0 (resp. f' + 2(l+1) f / r - f^2 - Q = 0), and
// into the f/g relations ((1-s)/x) f - f g + (s/x) g = Q and
// ((l+1)/r) g - f g + (l/r) f - Q = 0.

#include <string>
#include <string_view>
#include <vector>

#include "rpm/errors.hpp"
#include "rpm/potentials.hpp"
#include "rpm/ring.hpp"

namespace rpm {

struct Geometry {
  GeometryKind kind = GeometryKind::parity_1d;
  int s = 0;  // parity: 0 even, 1 odd
  int l = 0;  // angular momentum

  static Geometry parity(int s);
  static Geometry central(int l);
  /// "parity=0", "parity=1", "s=1", "even", "odd", "l=3".
  static Geometry parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

enum class Ansatz { f, g };

Ansatz parse_ansatz(std::string_view text);
std::string to_string(Ansatz a);

/// Parity: coefficient j multiplies x^(2j+1). Central field: r^j.
template <class R>
struct AnsatzCoeffs {
  Ansatz ansatz = Ansatz::f;
  Geometry geometry;
  std::vector<R> coeffs;

  const R& operator[](int j) const { return coeffs[static_cast<std::size_t>(j)]; }
  int jmax() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Largest coefficient index a D x D determinant with offset d reads.
constexpr int hankel_jmax(int dimension, int offset) { return 2 * dimension + offset - 1; }

namespace detail {

inline void require_q(int have, int need) {
  if (have < need) throw InvalidArgument("Q series too short for the requested coefficients");
}

}  // namespace detail

/// (2j + 1 + 2s) f_j = Q_j + sum_{k=0}^{j-1} f_k f_{j-1-k}
template <class R>
AnsatzCoeffs<R> f_parity(const QCoeffs<R>& q, int s, int jmax) {
  if (q.start_index != 0) throw InvalidArgument("parity geometry needs Q starting at j = 0");
  detail::require_q(q.jmax(), jmax);
  AnsatzCoeffs<R> out{Ansatz::f, Geometry::parity(s), {}};
  auto& f = out.coeffs;
  f.reserve(static_cast<std::size_t>(jmax) + 1);
  for (int j = 0; j <= jmax; ++j) {
    R acc = q[j];
    for (int k = 0; k < j; ++k) acc += f[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(j - 1 - k)];
    acc /= Rational(2 * j + 1 + 2 * s);
    f.push_back(std::move(acc));
  }
  return out;
}

/// s = 1: g_j = Q_j + sum_{k<j} f_k g_{j-1-k}
/// s = 0: f_0 g_{j-1} = f_j - Q_j - sum_{k=1}^{j-1} f_k g_{j-1-k}
template <class R>
AnsatzCoeffs<R> g_parity(const QCoeffs<R>& q, const AnsatzCoeffs<R>& f, int s, int jmax) {
  AnsatzCoeffs<R> out{Ansatz::g, Geometry::parity(s), {}};
  auto& g = out.coeffs;
  g.reserve(static_cast<std::size_t>(jmax) + 1);
  if (s == 1) {
    detail::require_q(q.jmax(), jmax);
    if (f.jmax() < jmax - 1) throw InvalidArgument("f series too short for g");
    for (int j = 0; j <= jmax; ++j) {
      R acc = q[j];
      for (int k = 0; k < j; ++k) acc += f[k] * g[static_cast<std::size_t>(j - 1 - k)];
      g.push_back(std::move(acc));
    }
    return out;
  }
  detail::require_q(q.jmax(), jmax + 1);
  if (f.jmax() < jmax + 1) throw InvalidArgument("f series too short for g");
  if (is_zero_divisor(f[0])) throw SingularAnsatz();
  for (int j = 1; j <= jmax + 1; ++j) {
    R acc = f[j] - q[j];
    for (int k = 1; k < j; ++k) acc -= f[k] * g[static_cast<std::size_t>(j - 1 - k)];
    acc /= f[0];
    g.push_back(std::move(acc));
  }
  return out;
}

/// 2(l+1) f_0 = Q_{-1};  (j + 2l + 3) f_{j+1} = Q_j + sum_{k=0}^{j} f_k f_{j-k}
template <class R>
AnsatzCoeffs<R> f_central(const QCoeffs<R>& q, int l, int jmax, const R& like) {
  if (q.start_index > 0) throw InvalidArgument("central geometry needs Q starting at j <= 0");
  detail::require_q(q.jmax(), jmax - 1);
  AnsatzCoeffs<R> out{Ansatz::f, Geometry::central(l), {}};
  auto& f = out.coeffs;
  f.reserve(static_cast<std::size_t>(jmax) + 1);
  f.push_back(q.at(-1, like) / Rational(2 * (l + 1)));
  for (int j = 0; j + 1 <= jmax; ++j) {
    R acc = q.at(j, like);
    for (int k = 0; k <= j; ++k) acc += f[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(j - k)];
    acc /= Rational(j + 2 * l + 3);
    f.push_back(std::move(acc));
  }
  return out;
}

template <class R>
AnsatzCoeffs<R> f_central(const QCoeffs<R>& q, int l, int jmax) {
  return f_central(q, l, jmax, q.coeffs.front());
}

/// (l+1) g_0 = Q_{-1} - l f_0;  (l+1) g_j = Q_{j-1} - l f_j + sum_{k<j} f_k g_{j-1-k}
template <class R>
AnsatzCoeffs<R> g_central(const QCoeffs<R>& q, const AnsatzCoeffs<R>& f, int l, int jmax, const R& like) {
  detail::require_q(q.jmax(), jmax - 1);
  if (f.jmax() < jmax) throw InvalidArgument("f series too short for g");
  AnsatzCoeffs<R> out{Ansatz::g, Geometry::central(l), {}};
  auto& g = out.coeffs;
  g.reserve(static_cast<std::size_t>(jmax) + 1);
  const Rational lq(l);
  const Rational lp1(l + 1);
  for (int j = 0; j <= jmax; ++j) {
    R acc = q.at(j - 1, like) - f[j] * lq;
    for (int k = 0; k < j; ++k) acc += f[k] * g[static_cast<std::size_t>(j - 1 - k)];
    acc /= lp1;
    g.push_back(std::move(acc));
  }
  return out;
}

template <class R>
AnsatzCoeffs<R> g_central(const QCoeffs<R>& q, const AnsatzCoeffs<R>& f, int l, int jmax) {
  return g_central(q, f, l, jmax, q.coeffs.front());
}

/// Largest Q index (in the geometry's own indexing) needed to produce the
/// Hankel coefficient sequence 0..count-1.
int q_jmax_needed(const PotentialSpec& potential, const Geometry& geometry, Ansatz ansatz, int count);

/// The coefficient sequence the Hankel determinant is built from,
/// entries 0..count-1. For even wells in the central-field geometry f and g
/// are odd in r; the sequence is then taken in z = r^2 (the r^(2j+1)
/// coefficients), matching the parity indexing.
template <class R>
std::vector<R> ansatz_sequence(const PotentialSpec& potential, const Geometry& geometry, Ansatz ansatz,
                               const QCoeffs<R>& q, int count, const R& like) {
  if (count < 1) throw InvalidArgument("need at least one coefficient");
  const int j = count - 1;
  if (geometry.kind == GeometryKind::parity_1d) {
    if (ansatz == Ansatz::f) return f_parity(q, geometry.s, j).coeffs;
    const int fj = geometry.s == 0 ? j + 1 : j;
    return g_parity(q, f_parity(q, geometry.s, fj), geometry.s, j).coeffs;
  }
  const bool compressed = potential.is_even();
  const int rj = compressed ? 2 * j + 1 : j;
  auto f = f_central(q, geometry.l, rj, like);
  std::vector<R> seq = ansatz == Ansatz::f ? std::move(f.coeffs) : g_central(q, f, geometry.l, rj, like).coeffs;
  if (!compressed) return seq;
  std::vector<R> odd;
  odd.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) odd.push_back(std::move(seq[static_cast<std::size_t>(2 * k + 1)]));
  return odd;
}

}  // namespace rpm
