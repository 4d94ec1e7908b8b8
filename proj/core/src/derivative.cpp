#include <algorithm>

#include "mgh/disjoint_union.hpp"
#include "mgh/errors.hpp"
#include "mgh/isometry.hpp"

namespace mgh {

DerivativeResult iso_derivative(const FiniteMetricSpace& x) {
  const OrbitPartition orbits = iso_orbits(isometry_group(x));
  const std::size_t m = orbits.classes.size();

  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& cls : orbits.classes) {
    std::string smallest = x.labels()[cls[0]];
    for (auto i : cls) smallest = std::min(smallest, x.labels()[i]);
    labels.push_back(std::move(smallest));
  }

  // Orbit-minimum distance; already a metric, no closure step involved.
  RationalMatrix d(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      Rational best = x.dist(orbits.classes[a][0], orbits.classes[b][0]);
      for (auto i : orbits.classes[a])
        for (auto j : orbits.classes[b]) best = min(best, x.dist(i, j));
      d[a][b] = d[b][a] = best;
    }

  FiniteMetricSpace quotient = validate_space(std::move(labels), std::move(d));
  PointMap projection = make_point_map(x, quotient, orbits.class_of);
  return DerivativeResult{std::move(quotient), std::move(projection), orbits.classes};
}

DerivativeResult alpha_derivative(const FiniteMetricSpace& x, const AlphaSpec& spec) {
  return quotient_by_zero(x, pseudometric_closure(alpha_matrix(x, spec)));
}

bool is_iso_rigid(const FiniteMetricSpace& x) { return isometry_group(x).trivial(); }

IhtResult iso_height(const FiniteMetricSpace& x) {
  IhtResult result;
  result.tower.push_back(x);
  while (!is_iso_rigid(result.tower.back())) {
    DerivativeResult step = iso_derivative(result.tower.back());
    result.projections.push_back(std::move(step.projection));
    result.tower.push_back(std::move(step.quotient));
  }
  result.height = result.tower.size() - 1;
  return result;
}

FiniteMetricSpace successor_space(const FiniteMetricSpace& x, const Rational& r) {
  IhtResult iht = iso_height(x);
  if (iht.height == 0)
    throw InputError("successor_space: the input must have iso-height at least 1");
  if (r <= diameter(x)) throw InputError("successor_space: r must exceed diam(X)");

  AdmissibleUnionSpec spec;
  spec.components = {x, iht.tower.back()};
  spec.params = {r};
  return admissible_union(spec).space;
}

FiniteMetricSpace limit_tower_space(const std::vector<FiniteMetricSpace>& components,
                                    const std::vector<Rational>& params, bool tail) {
  if (components.empty()) throw InputError("limit_tower_space: no components");
  const std::size_t needed = components.size() - (tail ? 0 : 1);
  if (params.size() != needed)
    throw InputError("limit_tower_space: expected " + std::to_string(needed) + " parameters");
  for (std::size_t k = 0; k + 1 < components.size(); ++k)
    if (diameter(components[k]) <= diameter(components[k + 1]))
      throw InputError("limit_tower_space: diameters must strictly decrease");
  for (std::size_t k = 0; k + 1 < params.size(); ++k)
    if (params[k] <= params[k + 1])
      throw InputError("limit_tower_space: parameters must strictly decrease");
  for (std::size_t k = 0; k < params.size(); ++k)
    if (params[k] <= diameter(components[k]))
      throw InputError("limit_tower_space: parameter " + std::to_string(k + 1) +
                       " must exceed the component diameter");

  AdmissibleUnionSpec spec;
  spec.components = components;
  spec.params = params;
  spec.include_tail_point = tail;
  return admissible_union(spec).space;
}

}  // namespace mgh
