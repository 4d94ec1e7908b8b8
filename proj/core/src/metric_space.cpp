#include "mgh/metric_space.hpp"

#include <set>

#include "mgh/errors.hpp"

namespace mgh {

FiniteMetricSpace validate_space(std::vector<std::string> labels, RationalMatrix dist) {
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("validate_space: empty space");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != n) throw InputError("validate_space: duplicate labels");
  if (dist.size() != n) throw InputError("validate_space: matrix size does not match labels");
  for (const auto& row : dist)
    if (row.size() != n) throw InputError("validate_space: matrix is not square");

  for (std::size_t i = 0; i < n; ++i) {
    if (!dist[i][i].is_zero()) throw DiagonalError(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) throw AsymmetryError(i, j);
      if (!dist[i][j].is_positive()) throw NonPositiveError(i, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist[i][k] > dist[i][j] + dist[j][k]) throw TriangleError(i, j, k);

  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

FiniteMetricSpace scale(const FiniteMetricSpace& x, const Rational& r) {
  if (!r.is_positive()) throw InputError("scale: factor must be positive");
  RationalMatrix d = x.dist_matrix();
  for (auto& row : d)
    for (auto& v : row) v *= r;
  return validate_space(x.labels(), std::move(d));
}

Rational diameter(const FiniteMetricSpace& x) {
  Rational best(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) best = max(best, x.dist(i, j));
  return best;
}

namespace {

void require_subset(const FiniteMetricSpace& x, const std::vector<std::size_t>& a,
                    const char* who) {
  if (a.empty()) throw InputError(std::string(who) + ": empty subset");
  for (auto i : a)
    if (i >= x.size()) throw InputError(std::string(who) + ": index out of range");
}

}  // namespace

Rational dist_sets(const FiniteMetricSpace& x, const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b) {
  require_subset(x, a, "dist_sets");
  require_subset(x, b, "dist_sets");
  Rational best = x.dist(a[0], b[0]);
  for (auto i : a)
    for (auto j : b) best = min(best, x.dist(i, j));
  return best;
}

Rational hausdorff_distance(const FiniteMetricSpace& ambient,
                            const std::vector<std::size_t>& a,
                            const std::vector<std::size_t>& b) {
  require_subset(ambient, a, "hausdorff_distance");
  require_subset(ambient, b, "hausdorff_distance");
  Rational best(0);
  for (auto i : a) best = max(best, dist_sets(ambient, {i}, b));
  for (auto j : b) best = max(best, dist_sets(ambient, {j}, a));
  return best;
}

FiniteMetricSpace subspace(const FiniteMetricSpace& x, const std::vector<std::size_t>& points) {
  require_subset(x, points, "subspace");
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (auto i : points) labels.push_back(x.labels()[i]);
  RationalMatrix d(points.size(), std::vector<Rational>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) d[i][j] = x.dist(points[i], points[j]);
  return validate_space(std::move(labels), std::move(d));
}

FiniteMetricSpace permuted(const FiniteMetricSpace& x, const std::vector<std::size_t>& perm) {
  if (perm.size() != x.size()) throw InputError("permuted: wrong permutation size");
  return subspace(x, perm);
}

}  // namespace mgh
