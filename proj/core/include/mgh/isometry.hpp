#ifndef MGH_ISOMETRY_HPP
#define MGH_ISOMETRY_HPP

#include <cstddef>
#include <variant>
#include <vector>

#include "mgh/metric_space.hpp"
#include "mgh/permutation.hpp"
#include "mgh/pseudometric.hpp"
#include "mgh/quotient.hpp"

namespace mgh {

/// The full set of distance-preserving permutations of a space, listed in
/// lexicographic order of image arrays. Always contains the identity and is
/// closed under composition and inverse.
struct IsometryGroup {
  std::size_t n = 0;
  std::vector<Permutation> elements;

  bool trivial() const { return elements.size() == 1; }
  bool contains(const Permutation& p) const;
};

/// Backtracking search over point assignments, points ordered by rarity of
/// their distance profiles; a partial assignment dies on the first pairwise
/// mismatch. Result is exact and deterministic.
IsometryGroup isometry_group(const FiniteMetricSpace& x);

struct OrbitPartition {
  std::vector<std::size_t> class_of;            // point index -> class id
  std::vector<std::vector<std::size_t>> classes;  // ordered by smallest member
};

OrbitPartition iso_orbits(const IsometryGroup& group);

/// Orbits of points under an arbitrary family of permutations (the family
/// need not be a group; orbits are taken under the generated action).
OrbitPartition orbits_of_family(std::size_t n, const std::vector<Permutation>& family);

// ---------------------------------------------------------------------------
// Comparison functions for generalized derivatives.

struct AlphaIso {};
struct AlphaIsoInv {};
struct AlphaIsoStab { std::vector<std::size_t> fixed_pointwise; };
struct AlphaIsoFixed { std::vector<std::size_t> preserved_set; };
struct AlphaSubgroup { std::vector<Permutation> generators; };
struct AlphaHomeo {};
struct AlphaLip { Rational bound; };
struct AlphaCustom { RationalMatrix cost; };

using AlphaSpec = std::variant<AlphaIso, AlphaIsoInv, AlphaIsoStab, AlphaIsoFixed,
                               AlphaSubgroup, AlphaHomeo, AlphaLip, AlphaCustom>;

/// The map family selected by spec, materialized as permutations.
/// For the isometry-based variants this is a verified subgroup of Iso(X);
/// for homeo it is every bijection; for lip every bijection whose expansion
/// ratios in both directions stay within the bound.
std::vector<Permutation> alpha_family(const FiniteMetricSpace& x, const AlphaSpec& spec);

/// alpha(x, y) = min over family pairs (u, v) of d(u(x), v(y)).
/// Symmetric, zero diagonal, pointwise below the metric.
RationalMatrix alpha_matrix(const FiniteMetricSpace& x, const AlphaSpec& spec);

/// Quotient by isometry orbits with the orbit-minimum distance, the greatest
/// metric making the projection non-expansive.
DerivativeResult iso_derivative(const FiniteMetricSpace& x);

/// Closure route: quotient_by_zero(x, pseudometric_closure(alpha_matrix)).
/// With the plain isometry spec this agrees with iso_derivative exactly.
DerivativeResult alpha_derivative(const FiniteMetricSpace& x, const AlphaSpec& spec);

struct IhtResult {
  std::size_t height = 0;
  std::vector<FiniteMetricSpace> tower;  // X^(0) ... X^(height)
  std::vector<PointMap> projections;     // tower[k] -> tower[k+1]
};

/// Iterates the iso-derivative until the space is iso-rigid. The height of
/// a finite space is a natural number below its point count.
IhtResult iso_height(const FiniteMetricSpace& x);

/// For finite spaces: trivial isometry group.
bool is_iso_rigid(const FiniteMetricSpace& x);

/// X joined with its terminal derivative at cross distance r > diam X.
/// Raises the iso-height by exactly one; requires height >= 1.
FiniteMetricSpace successor_space(const FiniteMetricSpace& x, const Rational& r);

/// Union of a strictly shrinking family (optionally with a far tail point)
/// whose isometries preserve every block. params must be strictly
/// decreasing with params[k] > diam(components[k]).
FiniteMetricSpace limit_tower_space(const std::vector<FiniteMetricSpace>& components,
                                    const std::vector<Rational>& params, bool tail);

}  // namespace mgh

#endif
