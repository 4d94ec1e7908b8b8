#include "mgh/gromov_hausdorff.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mgh/errors.hpp"

namespace mgh {

Rational distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                    const Correspondence& corr) {
  Rational dis(0);
  for (std::size_t a = 0; a < corr.pairs.size(); ++a)
    for (std::size_t b = a; b < corr.pairs.size(); ++b) {
      auto [i, j] = corr.pairs[a];
      auto [k, l] = corr.pairs[b];
      dis = max(dis, (x.dist(i, k) - y.dist(j, l)).abs());
    }
  return dis;
}

namespace {

// Decides whether some correspondence has distortion <= theta. Stage one
// picks one partner per X point, stage two covers the Y points the first
// stage missed. Every correspondence contains a sub-correspondence of this
// shape with no larger distortion, so the search is exhaustive.
class FeasibilitySearch {
public:
  FeasibilitySearch(const FiniteMetricSpace& x, const FiniteMetricSpace& y, const Rational& theta)
      : x_(x), y_(y), theta_(theta) {}

  bool run(Correspondence& out) {
    pairs_.clear();
    if (!assign_x(0)) return false;
    out.pairs = pairs_;
    return true;
  }

private:
  bool compatible(std::size_t i, std::size_t j) const {
    for (const auto& [k, l] : pairs_)
      if ((x_.dist(i, k) - y_.dist(j, l)).abs() > theta_) return false;
    return true;
  }

  bool assign_x(std::size_t i) {
    if (i == x_.size()) {
      std::vector<bool> hit(y_.size(), false);
      for (const auto& [k, l] : pairs_) hit[l] = true;
      std::vector<std::size_t> missing;
      for (std::size_t j = 0; j < y_.size(); ++j)
        if (!hit[j]) missing.push_back(j);
      return cover_y(missing, 0);
    }
    for (std::size_t j = 0; j < y_.size(); ++j) {
      if (!compatible(i, j)) continue;
      pairs_.emplace_back(i, j);
      if (assign_x(i + 1)) return true;
      pairs_.pop_back();
    }
    return false;
  }

  bool cover_y(const std::vector<std::size_t>& missing, std::size_t pos) {
    if (pos == missing.size()) return true;
    const std::size_t j = missing[pos];
    for (std::size_t i = 0; i < x_.size(); ++i) {
      if (!compatible(i, j)) continue;
      pairs_.emplace_back(i, j);
      if (cover_y(missing, pos + 1)) return true;
      pairs_.pop_back();
    }
    return false;
  }

  const FiniteMetricSpace& x_;
  const FiniteMetricSpace& y_;
  const Rational& theta_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

std::vector<Rational> realized_values(const FiniteMetricSpace& x, bool with_zero) {
  std::set<Rational> vals;
  if (with_zero) vals.insert(Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) vals.insert(x.dist(i, j));
  return {vals.begin(), vals.end()};
}

}  // namespace

GhEstimate gh_exact(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                    std::size_t size_limit) {
  if (x.size() > size_limit || y.size() > size_limit)
    throw InputError("gh_exact: space exceeds the size limit of " + std::to_string(size_limit) +
                     "; use gh_bounds");

  // Any correspondence distortion is |a - b| with a, b realized distances
  // or zero, so the optimum sits in this finite candidate list.
  std::vector<Rational> xv = realized_values(x, true);
  std::vector<Rational> yv = realized_values(y, true);
  std::set<Rational> cand_set;
  for (const auto& a : xv)
    for (const auto& b : yv) cand_set.insert((a - b).abs());
  std::vector<Rational> candidates(cand_set.begin(), cand_set.end());

  // Feasibility is monotone in theta: binary search the least feasible one.
  std::size_t lo = 0, hi = candidates.size() - 1;
  Correspondence witness;
  {
    Correspondence tmp;
    FeasibilitySearch top(x, y, candidates[hi]);
    bool ok = top.run(tmp);
    if (!ok) throw InputError("gh_exact: internal search failure");  // full relation always works
    witness = tmp;
  }
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    Correspondence tmp;
    FeasibilitySearch search(x, y, candidates[mid]);
    if (search.run(tmp)) {
      witness = tmp;
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }

  GhEstimate est;
  est.lower = est.upper = candidates[lo] / Rational(2);
  est.exact = true;
  est.witness = std::move(witness);
  return est;
}

namespace {

Rational value_set_mismatch(const std::vector<Rational>& from, const std::vector<Rational>& to) {
  // max over a in `from` of min over b in `to` of |a - b|.
  Rational worst(0);
  for (const auto& a : from) {
    Rational best = (a - to[0]).abs();
    for (const auto& b : to) best = min(best, (a - b).abs());
    worst = max(worst, best);
  }
  return worst;
}

// Deterministic point order: by eccentricity, then full sorted distance
// profile, then index.
std::vector<std::size_t> canonical_order(const FiniteMetricSpace& x) {
  std::vector<std::vector<Rational>> profile(x.size());
  std::vector<Rational> ecc(x.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) {
        profile[i].push_back(x.dist(i, j));
        ecc[i] = max(ecc[i], x.dist(i, j));
      }
    std::sort(profile[i].begin(), profile[i].end());
  }
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ecc[a] != ecc[b]) return ecc[a] < ecc[b];
    return profile[a] < profile[b];
  });
  return order;
}

// Map each point of `from` (larger side) onto `to` greedily, minimizing the
// incremental distortion of the partial correspondence.
Correspondence greedy_correspondence(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  const auto xo = canonical_order(x);
  const auto yo = canonical_order(y);

  Correspondence corr;
  auto incremental = [&](std::size_t i, std::size_t j) {
    Rational worst(0);
    for (const auto& [k, l] : corr.pairs) worst = max(worst, (x.dist(i, k) - y.dist(j, l)).abs());
    return worst;
  };

  if (x.size() >= y.size()) {
    // Seed with a proportional matching along canonical orders, then the
    // greedy pass keeps X covered while choosing partners for each x.
    for (std::size_t t = 0; t < x.size(); ++t) {
      std::size_t i = xo[t];
      std::size_t best_j = yo[t * y.size() / x.size()];
      Rational best = incremental(i, best_j);
      for (std::size_t s = 0; s < y.size(); ++s) {
        Rational v = incremental(i, yo[s]);
        if (v < best) {
          best = v;
          best_j = yo[s];
        }
      }
      corr.pairs.emplace_back(i, best_j);
    }
    std::vector<bool> hit(y.size(), false);
    for (const auto& [i, j] : corr.pairs) hit[j] = true;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (hit[j]) continue;
      std::size_t best_i = 0;
      Rational best = incremental(0, j);
      for (std::size_t i = 1; i < x.size(); ++i) {
        Rational v = incremental(i, j);
        if (v < best) {
          best = v;
          best_i = i;
        }
      }
      corr.pairs.emplace_back(best_i, j);
    }
  } else {
    Correspondence flipped = greedy_correspondence(y, x);
    for (auto [j, i] : flipped.pairs) corr.pairs.emplace_back(i, j);
  }
  return corr;
}

}  // namespace

GhEstimate gh_bounds(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  GhEstimate est;

  const Rational diam_gap = (diameter(x) - diameter(y)).abs();
  std::vector<Rational> xv = realized_values(x, false);
  std::vector<Rational> yv0 = realized_values(y, true);
  std::vector<Rational> yv = realized_values(y, false);
  std::vector<Rational> xv0 = realized_values(x, true);
  Rational mismatch(0);
  if (!xv.empty()) mismatch = max(mismatch, value_set_mismatch(xv, yv0));
  if (!yv.empty()) mismatch = max(mismatch, value_set_mismatch(yv, xv0));
  est.lower = max(diam_gap, mismatch) / Rational(2);

  Correspondence greedy = greedy_correspondence(x, y);
  Rational greedy_dis = distortion(x, y, greedy);
  // The full relation X x Y has distortion max(diam X, diam Y).
  Rational full_dis = max(diameter(x), diameter(y));
  est.upper = min(greedy_dis, full_dis) / Rational(2);

  est.exact = est.lower == est.upper;
  if (est.exact) {
    if (greedy_dis <= full_dis) {
      est.witness = std::move(greedy);
    } else {
      Correspondence full;
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) full.pairs.emplace_back(i, j);
      est.witness = std::move(full);
    }
  }
  return est;
}

Rational gh_upper_estimate(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                           std::size_t size_limit) {
  if (x.size() <= size_limit && y.size() <= size_limit) return gh_exact(x, y, size_limit).upper;
  return gh_bounds(x, y).upper;
}

}  // namespace mgh
