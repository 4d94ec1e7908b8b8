#ifndef MGH_TESTS_SUPPORT_HPP
#define MGH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgh/isometry.hpp"
#include "mgh/metric_space.hpp"
#include "mgh/pseudometric.hpp"

namespace mgh::test {

inline FiniteMetricSpace space_of(std::vector<std::vector<long>> m,
                                  std::vector<std::string> labels = {}) {
  const std::size_t n = m.size();
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  RationalMatrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = Rational(m[i][j]);
  return validate_space(std::move(labels), std::move(d));
}

inline FiniteMetricSpace line(std::vector<long> xs) {
  const std::size_t n = xs.size();
  std::vector<std::string> labels;
  for (auto v : xs) labels.push_back(std::to_string(v));
  RationalMatrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = Rational(xs[i] > xs[j] ? xs[i] - xs[j] : xs[j] - xs[i]);
  return validate_space(std::move(labels), std::move(d));
}

inline FiniteMetricSpace path4() { return line({0, 1, 2, 3}); }

// --- independent oracles -----------------------------------------------------

/// Every distance-preserving permutation, by filtering all n! of them.
inline std::vector<Permutation> brute_force_isometries(const FiniteMetricSpace& x) {
  std::vector<std::size_t> img(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) img[i] = i;
  std::vector<Permutation> found;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i)
      for (std::size_t j = i + 1; j < x.size() && ok; ++j)
        ok = x.dist(img[i], img[j]) == x.dist(i, j);
    if (ok) found.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return found;
}

/// Min-over-chains closure by exhaustive simple-chain enumeration
/// (a chain repeating a point never improves a nonnegative sum).
inline RationalMatrix chain_closure_oracle(const RationalMatrix& cost) {
  const std::size_t n = cost.size();
  RationalMatrix best = cost;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      std::vector<bool> used(n, false);
      used[s] = true;
      std::function<void(std::size_t, Rational)> dfs = [&](std::size_t at, Rational acc) {
        if (acc >= best[s][t]) return;
        if (at == t) {
          best[s][t] = acc;
          return;
        }
        for (std::size_t next = 0; next < n; ++next) {
          if (used[next]) continue;
          used[next] = true;
          dfs(next, acc + cost[at][next]);
          used[next] = false;
        }
      };
      dfs(s, Rational(0));
    }
  return best;
}

/// Exact Gromov-Hausdorff distance by enumerating every correspondence
/// (all coverings of X x Y as bitmasks); usable while |X|*|Y| <= 20.
inline Rational gh_all_correspondences_oracle(const FiniteMetricSpace& x,
                                              const FiniteMetricSpace& y) {
  const std::size_t m = x.size(), n = y.size();
  const std::size_t cells = m * n;
  if (cells > 20) throw std::runtime_error("oracle too large");
  Rational best(0);
  bool have = false;
  for (unsigned long mask = 1; mask < (1ul << cells); ++mask) {
    unsigned long xs = 0, ys = 0;
    for (std::size_t c = 0; c < cells; ++c)
      if (mask & (1ul << c)) {
        xs |= 1ul << (c / n);
        ys |= 1ul << (c % n);
      }
    if (xs != (1ul << m) - 1 || ys != (1ul << n) - 1) continue;
    Rational dis(0);
    for (std::size_t c1 = 0; c1 < cells; ++c1) {
      if (!(mask & (1ul << c1))) continue;
      for (std::size_t c2 = c1; c2 < cells; ++c2) {
        if (!(mask & (1ul << c2))) continue;
        Rational gap = (x.dist(c1 / n, c2 / n) - y.dist(c1 % n, c2 % n)).abs();
        dis = max(dis, gap);
      }
    }
    if (!have || dis < best) {
      best = dis;
      have = true;
    }
  }
  return best / Rational(2);
}

/// Deterministic generator of exact-rational finite metric spaces: either
/// L1 distances on small lattice points (symmetry-rich) or the min-plus
/// closure of a random positive cost matrix.
class SpaceGenerator {
public:
  explicit SpaceGenerator(unsigned seed) : rng_(seed) {}

  FiniteMetricSpace next(std::size_t max_points) {
    std::uniform_int_distribution<std::size_t> size_dist(1, max_points);
    std::size_t n = size_dist(rng_);
    if (rng_() % 2 == 0) return lattice(n);
    return closed_random(n);
  }

  FiniteMetricSpace lattice(std::size_t n) {
    std::uniform_int_distribution<long> coord(0, 3);
    std::vector<std::pair<long, long>> pts;
    while (pts.size() < n) {
      std::pair<long, long> p{coord(rng_), coord(rng_)};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    RationalMatrix d(n, std::vector<Rational>(n));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = Rational(std::abs(pts[i].first - pts[j].first) +
                           std::abs(pts[i].second - pts[j].second));
    return validate_space(std::move(labels), std::move(d));
  }

  FiniteMetricSpace closed_random(std::size_t n) {
    std::uniform_int_distribution<long> num(1, 12);
    RationalMatrix cost(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        cost[i][j] = cost[j][i] = Rational(num(rng_), 4);
    PseudometricMatrix closed = pseudometric_closure(cost);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return validate_space(std::move(labels), closed.dist_matrix());
  }

  std::mt19937& rng() { return rng_; }

private:
  std::mt19937 rng_;
};

}  // namespace mgh::test

#endif
