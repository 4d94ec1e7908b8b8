#ifndef MGH_METRIC_SPACE_HPP
#define MGH_METRIC_SPACE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mgh/rational.hpp"

namespace mgh {

/// A finite metric space: distinct point labels plus an exact rational
/// distance matrix satisfying the metric axioms. Instances are immutable
/// and can only be produced by validate_space (or by operations that
/// re-validate their output), so holding one is proof of validity.
class FiniteMetricSpace {
public:
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const RationalMatrix& dist_matrix() const { return dist_; }
  const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i][j]; }

  bool operator==(const FiniteMetricSpace& o) const {
    return labels_ == o.labels_ && dist_ == o.dist_;
  }

private:
  FiniteMetricSpace(std::vector<std::string> labels, RationalMatrix dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {}

  friend FiniteMetricSpace validate_space(std::vector<std::string> labels,
                                          RationalMatrix dist);

  std::vector<std::string> labels_;
  RationalMatrix dist_;
};

/// Checks all metric axioms and returns the verified space.
/// Throws AsymmetryError, DiagonalError, NonPositiveError or TriangleError
/// with the witnessing indices, InputError on shape mismatch.
FiniteMetricSpace validate_space(std::vector<std::string> labels, RationalMatrix dist);

/// Every distance multiplied by r > 0; labels preserved.
FiniteMetricSpace scale(const FiniteMetricSpace& x, const Rational& r);

Rational diameter(const FiniteMetricSpace& x);

/// min over a in A, b in B of d(a, b). Subsets must be non-empty.
Rational dist_sets(const FiniteMetricSpace& x, const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b);

/// Hausdorff distance between two non-empty subsets inside an ambient space.
Rational hausdorff_distance(const FiniteMetricSpace& ambient,
                            const std::vector<std::size_t>& a,
                            const std::vector<std::size_t>& b);

/// The sub-metric-space on the given distinct indices, keeping their labels.
FiniteMetricSpace subspace(const FiniteMetricSpace& x, const std::vector<std::size_t>& points);

/// Relabels points by a permutation of positions (new position i holds old
/// point perm[i]).
FiniteMetricSpace permuted(const FiniteMetricSpace& x, const std::vector<std::size_t>& perm);

}  // namespace mgh

#endif
