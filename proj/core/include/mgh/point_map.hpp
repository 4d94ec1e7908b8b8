#ifndef MGH_POINT_MAP_HPP
#define MGH_POINT_MAP_HPP

#include <cstddef>
#include <vector>

#include "mgh/metric_space.hpp"

namespace mgh {

/// A total function between finite metric spaces. The flags are computed
/// from the data on construction and never trusted from input.
struct PointMap {
  FiniteMetricSpace source;
  FiniteMetricSpace target;
  std::vector<std::size_t> image;  // source index -> target index

  bool non_expansive = false;
  bool surjective = false;
  bool isometric = false;  // distance-preserving (implies injective)

  std::size_t operator()(std::size_t i) const { return image[i]; }
};

/// Builds a PointMap and recomputes all flags. Throws InputError when the
/// image array has the wrong length or points outside the target.
PointMap make_point_map(FiniteMetricSpace source, FiniteMetricSpace target,
                        std::vector<std::size_t> image);

/// g after f; requires f.target == g.source.
PointMap compose(const PointMap& f, const PointMap& g);

PointMap identity_map(const FiniteMetricSpace& x);

}  // namespace mgh

#endif
