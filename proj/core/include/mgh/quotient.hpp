#ifndef MGH_QUOTIENT_HPP
#define MGH_QUOTIENT_HPP

#include <cstddef>
#include <vector>

#include "mgh/metric_space.hpp"
#include "mgh/point_map.hpp"
#include "mgh/pseudometric.hpp"

namespace mgh {

/// A quotient of a space by the zero classes of a pseudometric, together
/// with the canonical projection. Class labels are the lexicographically
/// smallest member label; zero_classes lists members per class, classes
/// ordered by smallest member index.
struct DerivativeResult {
  FiniteMetricSpace quotient;
  PointMap projection;
  std::vector<std::vector<std::size_t>> zero_classes;
};

/// Merges points at pseudometric distance zero; the class distance is the
/// pseudometric between any representatives (well defined by the triangle
/// inequality).
DerivativeResult quotient_by_zero(const FiniteMetricSpace& x, const PseudometricMatrix& p);

}  // namespace mgh

#endif
