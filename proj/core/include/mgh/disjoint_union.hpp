#ifndef MGH_DISJOINT_UNION_HPP
#define MGH_DISJOINT_UNION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mgh/metric_space.hpp"

namespace mgh {

/// Disjoint union of finitely many spaces where all cross distances between
/// components k < l equal the parameter of the smaller index k, optionally
/// with a one extra far point at distance params[k] from component k
/// (a finite stand-in for the tail of an infinite union).
struct AdmissibleUnionSpec {
  std::vector<FiniteMetricSpace> components;
  std::vector<Rational> params;  // indexed by smaller component index
  bool include_tail_point = false;
  std::string tail_label = "inf";
};

struct AdmissibleUnion {
  FiniteMetricSpace space;
  /// Component index per union point; the tail point gets components.size().
  std::vector<std::size_t> component_of;
  /// Union index of the first point of each component.
  std::vector<std::size_t> offset;
  /// Violations of the textbook parameter conditions (monotone diameters,
  /// 2*r_{k-1} >= r_k, r_k >= diam_k / 2). The assembled matrix is checked
  /// directly, so these are advisory.
  std::vector<std::string> warnings;
};

/// Assembles the union and validates the full metric. Component labels are
/// prefixed "k:" with k the 1-based component index so labels stay distinct.
AdmissibleUnion admissible_union(const AdmissibleUnionSpec& spec);

}  // namespace mgh

#endif
