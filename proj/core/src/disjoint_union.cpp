#include "mgh/disjoint_union.hpp"

#include "mgh/errors.hpp"

namespace mgh {

AdmissibleUnion admissible_union(const AdmissibleUnionSpec& spec) {
  const std::size_t m = spec.components.size();
  if (m == 0) throw InputError("admissible_union: no components");
  const std::size_t blocks = m + (spec.include_tail_point ? 1 : 0);
  const std::size_t needed_params = blocks - 1;
  if (spec.params.size() != needed_params)
    throw InputError("admissible_union: expected " + std::to_string(needed_params) +
                     " parameters, got " + std::to_string(spec.params.size()));
  for (const auto& r : spec.params)
    if (!r.is_positive()) throw InputError("admissible_union: parameters must be positive");

  std::vector<std::string> warnings;
  for (std::size_t k = 0; k + 1 < m; ++k)
    if (diameter(spec.components[k]) < diameter(spec.components[k + 1]))
      warnings.push_back("diameters are not monotone decreasing at component " +
                         std::to_string(k + 1));
  for (std::size_t k = 1; k < spec.params.size(); ++k)
    if (spec.params[k - 1] + spec.params[k - 1] < spec.params[k])
      warnings.push_back("parameter condition 2*r_" + std::to_string(k) + " >= r_" +
                         std::to_string(k + 1) + " violated");
  for (std::size_t k = 0; k < spec.params.size() && k < m; ++k)
    if (spec.params[k] + spec.params[k] < diameter(spec.components[k]))
      warnings.push_back("parameter condition r_" + std::to_string(k + 1) +
                         " >= diam(X_" + std::to_string(k + 1) + ")/2 violated");

  std::size_t total = 0;
  std::vector<std::size_t> offset(m);
  for (std::size_t k = 0; k < m; ++k) {
    offset[k] = total;
    total += spec.components[k].size();
  }
  const std::size_t tail_index = total;
  if (spec.include_tail_point) total += 1;

  std::vector<std::string> labels(total);
  std::vector<std::size_t> component_of(total);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < spec.components[k].size(); ++i) {
      labels[offset[k] + i] = std::to_string(k + 1) + ":" + spec.components[k].labels()[i];
      component_of[offset[k] + i] = k;
    }
  if (spec.include_tail_point) {
    labels[tail_index] = spec.tail_label;
    component_of[tail_index] = m;
  }

  RationalMatrix d(total, std::vector<Rational>(total, Rational(0)));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < spec.components[k].size(); ++i)
      for (std::size_t j = 0; j < spec.components[k].size(); ++j)
        d[offset[k] + i][offset[k] + j] = spec.components[k].dist(i, j);
  for (std::size_t p = 0; p < total; ++p)
    for (std::size_t q = 0; q < total; ++q) {
      std::size_t bp = component_of[p], bq = component_of[q];
      if (bp == bq) continue;
      d[p][q] = spec.params[std::min(bp, bq)];
    }

  try {
    AdmissibleUnion out{validate_space(std::move(labels), std::move(d)), std::move(component_of),
                        std::move(offset), std::move(warnings)};
    return out;
  } catch (const TriangleError& e) {
    std::string note;
    for (const auto& w : warnings) note += (note.empty() ? "" : "; ") + w;
    if (note.empty()) note = "no textbook parameter condition is violated";
    throw TriangleError(e.i, e.j, e.k, note);
  }
}

}  // namespace mgh
