#include "mgh/point_map.hpp"

#include <algorithm>
#include <numeric>

#include "mgh/errors.hpp"

namespace mgh {

PointMap make_point_map(FiniteMetricSpace source, FiniteMetricSpace target,
                        std::vector<std::size_t> image) {
  if (image.size() != source.size()) throw InputError("point map: wrong image length");
  for (auto j : image)
    if (j >= target.size()) throw InputError("point map: image index out of range");

  PointMap m{std::move(source), std::move(target), std::move(image)};

  m.non_expansive = true;
  m.isometric = true;
  for (std::size_t i = 0; i < m.source.size() && (m.non_expansive || m.isometric); ++i)
    for (std::size_t j = i + 1; j < m.source.size(); ++j) {
      const Rational& ds = m.source.dist(i, j);
      const Rational& dt = m.target.dist(m.image[i], m.image[j]);
      if (dt > ds) m.non_expansive = false;
      if (dt != ds) m.isometric = false;
    }

  std::vector<bool> hit(m.target.size(), false);
  for (auto j : m.image) hit[j] = true;
  m.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return m;
}

PointMap compose(const PointMap& f, const PointMap& g) {
  if (!(f.target == g.source)) throw InputError("compose: maps do not chain");
  std::vector<std::size_t> image(f.source.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = g.image[f.image[i]];
  return make_point_map(f.source, g.target, std::move(image));
}

PointMap identity_map(const FiniteMetricSpace& x) {
  std::vector<std::size_t> image(x.size());
  std::iota(image.begin(), image.end(), 0);
  return make_point_map(x, x, std::move(image));
}

}  // namespace mgh
