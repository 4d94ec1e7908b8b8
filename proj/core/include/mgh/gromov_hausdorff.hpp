#ifndef MGH_GROMOV_HAUSDORFF_HPP
#define MGH_GROMOV_HAUSDORFF_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mgh/metric_space.hpp"

namespace mgh {

/// A relation between X and Y covering both sides.
struct Correspondence {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct GhEstimate {
  Rational lower;
  Rational upper;
  bool exact = false;
  std::optional<Correspondence> witness;
};

inline constexpr std::size_t kGhDefaultSizeLimit = 6;

/// Exact Gromov-Hausdorff distance as half the minimum correspondence
/// distortion (equivalently, the infimum of Hausdorff distances over
/// admissible metrics on the disjoint union). Feasibility of each candidate
/// distortion value is decided by depth-first search, so the result is exact
/// rational arithmetic end to end. Throws InputError above the size limit.
GhEstimate gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                    std::size_t size_limit = kGhDefaultSizeLimit);

/// Scalable certified bracket: lower bound from the diameter gap and the
/// mismatch of realized distance values, upper bound from greedy
/// correspondences. Always lower <= d_GH <= upper.
GhEstimate gh_bounds(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// gh_exact when both spaces fit under the limit, otherwise gh_bounds.upper.
Rational gh_upper_estimate(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                           std::size_t size_limit = kGhDefaultSizeLimit);

/// Distortion of a correspondence: max over pairs of pairs of the absolute
/// difference of matched distances. d_GH <= dis/2 for any correspondence.
Rational distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                    const Correspondence& corr);

using SpaceProvider = std::function<FiniteMetricSpace(std::size_t)>;  // 1-based index

struct CauchyCertificate {
  std::size_t tail_index = 0;
  Rational tolerance;
  /// (m, n, upper bound on d_GH(X_m, X_n)); every bound <= tolerance.
  std::vector<std::tuple<std::size_t, std::size_t, Rational>> pair_bounds;
};

struct ConvergenceReport {
  bool certified = false;
  std::optional<CauchyCertificate> certificate;
  /// When not certified: a pair past the last candidate tail whose bound
  /// exceeded the tolerance.
  std::optional<std::tuple<std::size_t, std::size_t, Rational>> violation;
};

/// Searches for the first tail index T with all pairwise upper bounds among
/// indices [T, T + window] at most tol. Never certifies from bounds it did
/// not compute; failure is reported explicitly.
ConvergenceReport gh_convergence_certificate(const SpaceProvider& seq, std::size_t n_max,
                                             const Rational& tol, std::size_t window,
                                             std::size_t size_limit = kGhDefaultSizeLimit);

struct DisjointSumRow {
  std::size_t index = 0;
  Rational union_distance;  // upper estimate of d_GH(X_n ⊔ Y_n, X ⊔ Y)
  Rational sum_distance;    // estimate of d_GH(X_n, X) + d_GH(Y_n, Y)
  bool within_sum = false;
};

struct DisjointSumReport {
  std::vector<DisjointSumRow> rows;
  bool certified = false;
  std::size_t tail_index = 0;
};

/// Assembles X_n ⊔ Y_n and X ⊔ Y with the same cross parameter r, compares
/// the union distance against the sum of component distances, and certifies
/// the tail where the union distance falls below tol.
DisjointSumReport verify_disjoint_sum_convergence(const SpaceProvider& xseq,
                                                  const SpaceProvider& yseq,
                                                  const FiniteMetricSpace& x,
                                                  const FiniteMetricSpace& y, const Rational& r,
                                                  const Rational& tol, std::size_t n_max,
                                                  std::size_t size_limit = kGhDefaultSizeLimit);

}  // namespace mgh

#endif
