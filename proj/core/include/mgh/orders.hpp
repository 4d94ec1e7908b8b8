#ifndef MGH_ORDERS_HPP
#define MGH_ORDERS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mgh/gromov_hausdorff.hpp"
#include "mgh/metric_space.hpp"
#include "mgh/point_map.hpp"

namespace mgh {

enum class OrderRelation { preceq, preceq_s, preceq_i };

std::string relation_name(OrderRelation rel);

/// Decision with a re-verifiable witness:
///  - preceq:   witness_map is a non-expansive surjection Y -> X;
///  - preceq_s: witness_subset K of Y plus a non-expansive surjection K -> X;
///  - preceq_i: witness_map is a distance-preserving injection X -> Y.
struct OrderVerdict {
  OrderRelation relation;
  bool holds = false;
  std::optional<PointMap> witness_map;
  std::optional<std::vector<std::size_t>> witness_subset;
};

/// X ≼ Y: some non-expansive map from Y onto X. Exhaustive backtracking,
/// targets ordered by decreasing eccentricity, pruned by the non-expansive
/// constraint and by a surjectivity capacity bound.
OrderVerdict preceq(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// X ≼_s Y: X ≼ K for some subset K of Y (every subset of a finite space
/// is closed). Subsets enumerated in decreasing size.
OrderVerdict preceq_s(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

/// X ≼_i Y: X is isometric to a subset of Y.
OrderVerdict preceq_i(const FiniteMetricSpace& x, const FiniteMetricSpace& y);

OrderVerdict decide_order(OrderRelation rel, const FiniteMetricSpace& x,
                          const FiniteMetricSpace& y);

struct EpsilonNetEntry {
  Rational epsilon;
  std::size_t n = 0;  // max over the family of the minimal net size
  std::vector<std::vector<std::size_t>> nets;  // one eps-dense subset per member
  std::vector<std::size_t> member_sizes;       // minimal net size per member
  /// Net sizes strictly grow along the family; on an unbounded family
  /// prefix this is the shape of a uniform-compactness failure.
  bool growing = false;
};

struct UniformCompactnessReport {
  Rational bounded_diam;
  std::vector<EpsilonNetEntry> per_epsilon;
};

/// For each epsilon the minimal N such that every member has an N-element
/// eps-dense subset (exact by subset enumeration for n <= 12, greedy above).
UniformCompactnessReport uniform_compactness(const std::vector<FiniteMetricSpace>& family,
                                             const std::vector<Rational>& epsilons);

/// Minimal eps-dense subset of one space (see uniform_compactness).
std::vector<std::size_t> minimal_epsilon_net(const FiniteMetricSpace& x, const Rational& epsilon);

struct CommonSuperspace {
  FiniteMetricSpace space;
  std::vector<PointMap> embeddings;  // member k -> space, distance-preserving
  Rational parameter;
};

/// Admissible union of the family with one cross parameter (the maximal
/// member diameter, or 1 when all members are points). Contains an isometric
/// copy of every member and dominates each member in all three orders.
CommonSuperspace common_superspace(const std::vector<FiniteMetricSpace>& family);

enum class MonotoneDirection { decreasing, increasing };

struct MonotoneLimitReport {
  enum class Status { exact, certified, inconclusive };
  Status status = Status::inconclusive;
  std::optional<FiniteMetricSpace> object;  // exact limit or tail representative
  std::optional<ConvergenceReport> convergence;
  std::vector<PointMap> chain_witnesses;  // verified monotonicity witnesses
  std::string note;
};

/// Verifies the monotone chain (and the bound, for increasing sequences),
/// then returns the exact stabilized space when the tail witnesses become
/// bijective isometries, a certified tail representative otherwise, and an
/// explicit inconclusive status when neither is available.
MonotoneLimitReport monotone_limit(const SpaceProvider& seq, std::size_t n_max,
                                   MonotoneDirection direction,
                                   const std::optional<FiniteMetricSpace>& bound,
                                   const Rational& tol, std::size_t window);

}  // namespace mgh

#endif
