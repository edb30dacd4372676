#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rpm/hankel.hpp"
#include "rpm/reference.hpp"

namespace rpm {

struct SolverOptions {
  int digits = 0;          // 0: auto_digits of the largest dimension involved
  int target_digits = 10;  // convergence threshold on the final delta
  int max_newton = 60;
  int max_misses = 4;      // consecutive dimensions without a root before giving up
  double max_jump = 0.02;  // relative search radius around the previous root
  int grid_points = 512;   // per scan window
  int scan_dimension = 0;  // dimension roots are discovered at; 0: min(D_max - 6, 12), at least 1
  int dimension_step = 1;

  int digits_for(int dimension) const { return digits > 0 ? digits : auto_digits(dimension); }
  int scan_for(int d_max) const {
    return scan_dimension > 0 ? std::min(scan_dimension, d_max) : std::clamp(d_max - 6, 1, 12);
  }
};

struct Bracket {
  BigReal lo;
  BigReal hi;
};

struct RootEntry {
  int dimension = 0;
  BigReal root;
};

enum class SequenceStatus { converged, drifting, lost };

std::string to_string(SequenceStatus s);

struct RootSequence {
  HankelProblem problem;  // dimension field unused
  std::vector<RootEntry> entries;
  std::optional<BigReal> converged;
  int est_correct_digits = 0;
  SequenceStatus status = SequenceStatus::lost;
  int digits = 0;
  std::vector<int> missing;  // dimensions where no root was found

  bool empty() const { return entries.empty(); }
  const BigReal& last() const { return entries.back().root; }
  /// Best estimate: the converged value, else the last root.
  const BigReal& value() const { return converged ? *converged : last(); }
};

/// Applies the convergence rule to `seq.entries` (sorted by dimension):
/// converged iff the last three deltas are non-increasing and the final one
/// is below 10^-target_digits. est_correct_digits = floor(-log10 |last delta|)
/// clamped to [0, digits].
void classify(RootSequence& seq, int target_digits);

/// Adjacent grid pairs where the determinant changes sign. Grid points where
/// the ansatz is singular are skipped.
std::vector<Bracket> scan_sign_changes(const HankelProblem& problem, const BigReal& lo, const BigReal& hi,
                                       int grid_points);

/// Roots located in [lo, hi]: sign-change cells refined by bisection plus
/// Newton runs (with deflation) from grid points whose Newton step is short,
/// which also finds clusters of roots that do not change the sign.
std::vector<BigReal> find_roots(const HankelProblem& problem, const BigReal& lo, const BigReal& hi,
                                const SolverOptions& options = {});

/// Newton iteration on the determinant with the dual-number derivative.
/// Falls back to bisection inside `bracket` (or a bracket searched near the
/// seed) if Newton leaves it or stalls. Throws RootLost.
BigReal refine_root(const HankelProblem& problem, const BigReal& seed, const SolverOptions& options = {},
                    const std::optional<Bracket>& bracket = std::nullopt);

/// Follows a root from `seed` through dimensions d_from .. d_to (either
/// direction), seeding each dimension with the previous root. Entries are
/// returned sorted by dimension.
RootSequence track_sequence(const HankelProblem& family, const BigReal& seed, int d_from, int d_to,
                            const SolverOptions& options = {});

struct LabeledSequence {
  int n = 0;  // 1-based; 0 when not labeled
  RootSequence sequence;
};

/// E = 0 roots in v0 over geometrically growing windows [0,2], [2,4], ...
/// Roots found at the scan dimension are tracked up to D_max; sequences
/// agreeing to their estimated digits are merged and the plausible ones
/// (converged, or drifting with at least 6 stable digits) labeled n = 1, 2, ...
std::vector<LabeledSequence> critical_parameters(const PotentialSpec& potential, const Geometry& geometry,
                                                 Ansatz ansatz, int n_max, int d_max,
                                                 const SolverOptions& options = {}, int offset = 0);

struct EigenBracket {
  int n = 0;
  std::optional<BigReal> lower;  // last d=1 root
  std::optional<BigReal> upper;  // last d=0 root
  RootSequence lower_sequence;
  RootSequence upper_sequence;
  bool partial = false;

  std::optional<BigReal> width() const;
};

/// Roots in E of the f-ansatz determinants at fixed v0, tracked with d = 0
/// (from above) and d = 1 (from below) up to D_max. For parity geometries n
/// is the level index of the well (its parity must be s); for central fields
/// it counts the levels of the given l from 0.
EigenBracket eigenvalue_bracket(const PotentialSpec& potential, const Geometry& geometry, const Rational& v0,
                                int n, int d_max, const SolverOptions& options = {});

struct LabeledRoot {
  BigReal value;
  RootLabel label = RootLabel::unlabeled;
  std::string source;
};

/// All sign-change roots in E within [lo, hi] at a single (D, d), labeled
/// against the reference catalog.
std::vector<LabeledRoot> spurious_scan(const PotentialSpec& potential, const Geometry& geometry,
                                       const Rational& v0, int dimension, int offset, const BigReal& lo,
                                       const BigReal& hi, const SolverOptions& options = {});

}  // namespace rpm
