#ifndef MGH_BENCH_COMMON_HPP
#define MGH_BENCH_COMMON_HPP

#include <string>
#include <vector>

#include "mgh/metric_space.hpp"

namespace mgh::bench {

/// Discrete space on n points (maximal symmetry, worst case for the
/// isometry search).
inline FiniteMetricSpace discrete(std::size_t n) {
  std::vector<std::string> labels;
  RationalMatrix d(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d[i][j] = Rational(1);
  }
  return validate_space(std::move(labels), std::move(d));
}

/// Points 0, 1, ..., n-1 on a line (two isometries).
inline FiniteMetricSpace segment(std::size_t n) {
  std::vector<std::string> labels;
  RationalMatrix d(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      d[i][j] = Rational(i > j ? static_cast<long>(i - j) : static_cast<long>(j - i));
  }
  return validate_space(std::move(labels), std::move(d));
}

/// Cycle with the path metric (dihedral symmetry group of order 2n).
inline FiniteMetricSpace cycle(std::size_t n) {
  std::vector<std::string> labels;
  RationalMatrix d(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t gap = i > j ? i - j : j - i;
      d[i][j] = Rational(static_cast<long>(std::min(gap, n - gap)));
    }
  }
  return validate_space(std::move(labels), std::move(d));
}

}  // namespace mgh::bench

#endif
