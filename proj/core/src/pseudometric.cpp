#include "mgh/pseudometric.hpp"

#include "mgh/errors.hpp"

namespace mgh {

void check_cost_matrix(const RationalMatrix& cost) {
  const std::size_t n = cost.size();
  for (const auto& row : cost)
    if (row.size() != n) throw InputError("cost matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!cost[i][i].is_zero()) throw DiagonalError(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cost[i][j] != cost[j][i]) throw AsymmetryError(i, j);
      if (cost[i][j].is_negative()) throw NegativeEntryError(i, j);
    }
  }
}

PseudometricMatrix validate_pseudometric(RationalMatrix dist) {
  check_cost_matrix(dist);
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist[i][k] > dist[i][j] + dist[j][k]) throw TriangleError(i, j, k);
  return PseudometricMatrix(std::move(dist));
}

PseudometricMatrix pseudometric_closure(const RationalMatrix& cost) {
  check_cost_matrix(cost);
  RationalMatrix d = cost;
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational via = d[i][k] + d[k][j];
        if (via < d[i][j]) d[i][j] = via;
      }
  return validate_pseudometric(std::move(d));
}

}  // namespace mgh
