#include "mgh/quotient.hpp"

#include <algorithm>

#include "mgh/errors.hpp"

namespace mgh {

DerivativeResult quotient_by_zero(const FiniteMetricSpace& x, const PseudometricMatrix& p) {
  const std::size_t n = x.size();
  if (p.size() != n) throw InputError("quotient_by_zero: pseudometric size mismatch");

  // Zero-distance is transitive for a pseudometric, so a sweep suffices.
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, unassigned);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != unassigned) continue;
    std::vector<std::size_t> members{i};
    class_of[i] = classes.size();
    for (std::size_t j = i + 1; j < n; ++j)
      if (class_of[j] == unassigned && p.dist(i, j).is_zero()) {
        class_of[j] = classes.size();
        members.push_back(j);
      }
    classes.push_back(std::move(members));
  }

  std::vector<std::string> labels;
  labels.reserve(classes.size());
  for (const auto& cls : classes) {
    std::string smallest = x.labels()[cls[0]];
    for (auto m : cls) smallest = std::min(smallest, x.labels()[m]);
    labels.push_back(std::move(smallest));
  }

  RationalMatrix d(classes.size(), std::vector<Rational>(classes.size()));
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = 0; b < classes.size(); ++b) d[a][b] = p.dist(classes[a][0], classes[b][0]);

  FiniteMetricSpace quotient = validate_space(std::move(labels), std::move(d));
  PointMap projection = make_point_map(x, quotient, class_of);
  return DerivativeResult{std::move(quotient), std::move(projection), std::move(classes)};
}

}  // namespace mgh
