#ifndef MGH_PSEUDOMETRIC_HPP
#define MGH_PSEUDOMETRIC_HPP

#include <cstddef>

#include "mgh/rational.hpp"

namespace mgh {

/// A symmetric nonnegative matrix with zero diagonal satisfying the
/// triangle inequality; off-diagonal zeros are allowed.
class PseudometricMatrix {
public:
  std::size_t size() const { return dist_.size(); }
  const RationalMatrix& dist_matrix() const { return dist_; }
  const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i][j]; }

  bool operator==(const PseudometricMatrix& o) const { return dist_ == o.dist_; }

private:
  explicit PseudometricMatrix(RationalMatrix dist) : dist_(std::move(dist)) {}
  friend PseudometricMatrix validate_pseudometric(RationalMatrix dist);
  RationalMatrix dist_;
};

PseudometricMatrix validate_pseudometric(RationalMatrix dist);

/// Throws unless the matrix is square, symmetric, nonnegative with zero
/// diagonal. Triangle inequality is not required here.
void check_cost_matrix(const RationalMatrix& cost);

/// The greatest pseudometric pointwise below the given cost matrix:
/// the min-plus transitive closure inf over chains of sum of costs.
PseudometricMatrix pseudometric_closure(const RationalMatrix& cost);

}  // namespace mgh

#endif
