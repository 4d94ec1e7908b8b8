#include "mgh/orders.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mgh/disjoint_union.hpp"
#include "mgh/errors.hpp"

namespace mgh {

std::string relation_name(OrderRelation rel) {
  switch (rel) {
    case OrderRelation::preceq: return "preceq";
    case OrderRelation::preceq_s: return "preceq_s";
    case OrderRelation::preceq_i: return "preceq_i";
  }
  return "?";
}

namespace {

std::vector<std::size_t> by_decreasing_eccentricity(const FiniteMetricSpace& x) {
  std::vector<Rational> ecc(x.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) ecc[i] = max(ecc[i], x.dist(i, j));
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ecc[b] < ecc[a]; });
  return order;
}

// Assigns phi(y) for y in `order`, keeping phi non-expansive into x and
// leaving enough unassigned points to cover x.
bool search_surjection(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                       const std::vector<std::size_t>& order, std::size_t depth,
                       std::vector<std::size_t>& image, std::vector<std::size_t>& cover_count,
                       std::size_t covered) {
  if (depth == order.size()) return covered == x.size();
  if (x.size() - covered > order.size() - depth) return false;  // capacity prune

  const std::size_t yi = order[depth];
  for (std::size_t t = 0; t < x.size(); ++t) {
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const std::size_t prev = order[d];
      ok = x.dist(t, image[prev]) <= y.dist(yi, prev);
    }
    if (!ok) continue;
    image[yi] = t;
    ++cover_count[t];
    if (search_surjection(x, y, order, depth + 1, image, cover_count,
                          covered + (cover_count[t] == 1 ? 1 : 0)))
      return true;
    --cover_count[t];
  }
  return false;
}

}  // namespace

OrderVerdict preceq(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  OrderVerdict verdict{OrderRelation::preceq, false, std::nullopt, std::nullopt};
  if (x.size() > y.size()) return verdict;  // no surjection at all

  const auto order = by_decreasing_eccentricity(y);
  std::vector<std::size_t> image(y.size(), 0);
  std::vector<std::size_t> cover_count(x.size(), 0);
  if (search_surjection(x, y, order, 0, image, cover_count, 0)) {
    verdict.holds = true;
    verdict.witness_map = make_point_map(y, x, image);
  }
  return verdict;
}

namespace {

void subsets_of_size(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return;
  while (true) {
    if (visit(pick)) return;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

OrderVerdict preceq_s(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  OrderVerdict verdict{OrderRelation::preceq_s, false, std::nullopt, std::nullopt};
  for (std::size_t k = y.size(); k >= x.size() && k >= 1; --k) {
    bool found = false;
    subsets_of_size(y.size(), k, [&](const std::vector<std::size_t>& pick) {
      OrderVerdict sub = preceq(x, subspace(y, pick));
      if (sub.holds) {
        verdict.holds = true;
        verdict.witness_subset = pick;
        verdict.witness_map = sub.witness_map;
        found = true;
      }
      return found;
    });
    if (found) break;
    if (k == 1) break;
  }
  return verdict;
}

namespace {

bool search_embedding(const FiniteMetricSpace& x, const FiniteMetricSpace& y, std::size_t i,
                      std::vector<std::size_t>& image, std::vector<bool>& used) {
  if (i == x.size()) return true;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t p = 0; p < i && ok; ++p) ok = y.dist(j, image[p]) == x.dist(i, p);
    if (!ok) continue;
    image[i] = j;
    used[j] = true;
    if (search_embedding(x, y, i + 1, image, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

OrderVerdict preceq_i(const FiniteMetricSpace& x, const FiniteMetricSpace& y) {
  OrderVerdict verdict{OrderRelation::preceq_i, false, std::nullopt, std::nullopt};
  if (x.size() > y.size()) return verdict;
  std::vector<std::size_t> image(x.size(), 0);
  std::vector<bool> used(y.size(), false);
  if (search_embedding(x, y, 0, image, used)) {
    verdict.holds = true;
    verdict.witness_map = make_point_map(x, y, image);
  }
  return verdict;
}

OrderVerdict decide_order(OrderRelation rel, const FiniteMetricSpace& x,
                          const FiniteMetricSpace& y) {
  switch (rel) {
    case OrderRelation::preceq: return preceq(x, y);
    case OrderRelation::preceq_s: return preceq_s(x, y);
    case OrderRelation::preceq_i: return preceq_i(x, y);
  }
  throw InputError("unknown relation");
}

namespace {

bool is_eps_dense(const FiniteMetricSpace& x, const std::vector<std::size_t>& net,
                  const Rational& eps) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    bool close = false;
    for (auto a : net)
      if (x.dist(p, a) < eps) {
        close = true;
        break;
      }
    if (!close) return false;
  }
  return true;
}

std::vector<std::size_t> greedy_epsilon_net(const FiniteMetricSpace& x, const Rational& eps) {
  std::vector<bool> covered(x.size(), false);
  std::vector<std::size_t> net;
  while (true) {
    std::size_t best = x.size();
    std::size_t best_gain = 0;
    for (std::size_t a = 0; a < x.size(); ++a) {
      std::size_t gain = 0;
      for (std::size_t p = 0; p < x.size(); ++p)
        if (!covered[p] && x.dist(p, a) < eps) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best = a;
      }
    }
    if (best == x.size()) break;
    net.push_back(best);
    for (std::size_t p = 0; p < x.size(); ++p)
      if (x.dist(p, best) < eps) covered[p] = true;
    if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) break;
  }
  std::sort(net.begin(), net.end());
  return net;
}

}  // namespace

std::vector<std::size_t> minimal_epsilon_net(const FiniteMetricSpace& x, const Rational& eps) {
  if (!eps.is_positive()) throw InputError("epsilon must be positive");
  // Exact minimum by subset enumeration at desk scale, greedy beyond.
  if (x.size() > 12) return greedy_epsilon_net(x, eps);
  for (std::size_t k = 1; k <= x.size(); ++k) {
    std::vector<std::size_t> found;
    subsets_of_size(x.size(), k, [&](const std::vector<std::size_t>& pick) {
      if (is_eps_dense(x, pick, eps)) {
        found = pick;
        return true;
      }
      return false;
    });
    if (!found.empty()) return found;
  }
  throw InputError("epsilon net search failed");  // unreachable: the full set is dense
}

UniformCompactnessReport uniform_compactness(const std::vector<FiniteMetricSpace>& family,
                                             const std::vector<Rational>& epsilons) {
  if (family.empty() || epsilons.empty())
    throw InputError("uniform_compactness: empty family or epsilon list");

  UniformCompactnessReport report;
  report.bounded_diam = diameter(family[0]);
  for (const auto& x : family) report.bounded_diam = max(report.bounded_diam, diameter(x));

  for (const auto& eps : epsilons) {
    EpsilonNetEntry entry;
    entry.epsilon = eps;
    for (const auto& x : family) {
      auto net = minimal_epsilon_net(x, eps);
      entry.member_sizes.push_back(net.size());
      entry.n = std::max(entry.n, net.size());
      entry.nets.push_back(std::move(net));
    }
    entry.growing = family.size() > 1;
    for (std::size_t i = 0; i + 1 < entry.member_sizes.size(); ++i)
      if (entry.member_sizes[i] >= entry.member_sizes[i + 1]) entry.growing = false;
    report.per_epsilon.push_back(std::move(entry));
  }
  return report;
}

CommonSuperspace common_superspace(const std::vector<FiniteMetricSpace>& family) {
  if (family.empty()) throw InputError("common_superspace: empty family");
  if (family.size() == 1)
    return CommonSuperspace{family[0], {identity_map(family[0])}, Rational(0)};

  Rational r(0);
  for (const auto& x : family) r = max(r, diameter(x));
  if (!r.is_positive()) r = Rational(1);  // family of singletons

  AdmissibleUnionSpec spec;
  spec.components = family;
  spec.params.assign(family.size() - 1, r);

  AdmissibleUnion u = admissible_union(spec);  // validate_space re-checks everything
  std::vector<PointMap> embeddings;
  for (std::size_t k = 0; k < family.size(); ++k) {
    std::vector<std::size_t> image(family[k].size());
    std::iota(image.begin(), image.end(), u.offset[k]);
    embeddings.push_back(make_point_map(family[k], u.space, std::move(image)));
  }
  return CommonSuperspace{std::move(u.space), std::move(embeddings), std::move(r)};
}

MonotoneLimitReport monotone_limit(const SpaceProvider& seq, std::size_t n_max,
                                   MonotoneDirection direction,
                                   const std::optional<FiniteMetricSpace>& bound,
                                   const Rational& tol, std::size_t window) {
  if (n_max < 2) throw InputError("monotone_limit: need at least two spaces");
  std::vector<FiniteMetricSpace> spaces;
  for (std::size_t n = 1; n <= n_max; ++n) spaces.push_back(seq(n));

  MonotoneLimitReport report;
  for (std::size_t n = 0; n + 1 < n_max; ++n) {
    // decreasing: X_{n+1} ≼ X_n, witnessed by a surjection X_n -> X_{n+1}.
    OrderVerdict v = direction == MonotoneDirection::decreasing
                         ? preceq(spaces[n + 1], spaces[n])
                         : preceq(spaces[n], spaces[n + 1]);
    if (!v.holds)
      throw InputError("monotone_limit: chain witness missing between indices " +
                       std::to_string(n + 1) + " and " + std::to_string(n + 2));
    report.chain_witnesses.push_back(*v.witness_map);
  }
  if (direction == MonotoneDirection::increasing) {
    if (!bound)
      throw InputError("monotone_limit: increasing sequences need an upper bound space");
    for (std::size_t n = 0; n < n_max; ++n)
      if (!preceq(spaces[n], *bound).holds)
        throw InputError("monotone_limit: bound witness missing for index " +
                         std::to_string(n + 1));
  }

  // Exact case: the chain witnesses become bijective isometries.
  std::size_t stable_from = n_max;  // 1-based index of the first stabilized space
  for (std::size_t n = n_max - 1; n >= 1; --n) {
    const PointMap& w = report.chain_witnesses[n - 1];
    if (w.isometric && w.surjective && w.source.size() == w.target.size())
      stable_from = n;
    else
      break;
    if (n == 1) break;
  }
  if (stable_from < n_max) {
    report.status = MonotoneLimitReport::Status::exact;
    report.object = spaces[n_max - 1];
    report.note = "chain stabilized at index " + std::to_string(stable_from);
    return report;
  }

  ConvergenceReport conv = gh_convergence_certificate(
      [&](std::size_t n) { return spaces[n - 1]; }, n_max, tol, window);
  if (conv.certified) {
    report.status = MonotoneLimitReport::Status::certified;
    report.object = spaces[conv.certificate->tail_index - 1];
    report.convergence = std::move(conv);
    report.note = "tail representative within tolerance";
  } else {
    report.status = MonotoneLimitReport::Status::inconclusive;
    report.convergence = std::move(conv);
    report.note = "no certificate within the provided prefix";
  }
  return report;
}

}  // namespace mgh
