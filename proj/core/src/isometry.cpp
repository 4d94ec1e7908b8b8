#include "mgh/isometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mgh/errors.hpp"

namespace mgh {

bool IsometryGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

namespace {

bool preserves_dist(const FiniteMetricSpace& x, const Permutation& p) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x.dist(p(i), p(j)) != x.dist(i, j)) return false;
  return true;
}

void search_isometries(const FiniteMetricSpace& x, const std::vector<std::size_t>& order,
                       const std::vector<std::vector<std::size_t>>& candidates,
                       std::size_t depth, std::vector<std::size_t>& image,
                       std::vector<bool>& used, std::vector<Permutation>& out) {
  const std::size_t n = x.size();
  if (depth == n) {
    out.emplace_back(image);
    return;
  }
  const std::size_t i = order[depth];
  for (std::size_t j : candidates[i]) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t t = 0; t < depth && ok; ++t) {
      const std::size_t prev = order[t];
      ok = x.dist(i, prev) == x.dist(j, image[prev]);
    }
    if (!ok) continue;
    used[j] = true;
    image[i] = j;
    search_isometries(x, order, candidates, depth + 1, image, used, out);
    used[j] = false;
  }
}

}  // namespace

IsometryGroup isometry_group(const FiniteMetricSpace& x) {
  const std::size_t n = x.size();

  // Points can only map to points with the same distance profile.
  std::vector<std::vector<Rational>> profile(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) profile[i].push_back(x.dist(i, j));
    std::sort(profile[i].begin(), profile[i].end());
  }
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (profile[i] == profile[j]) candidates[i].push_back(j);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].size() < candidates[b].size();
  });

  std::vector<Permutation> found;
  std::vector<std::size_t> image(n, 0);
  std::vector<bool> used(n, false);
  search_isometries(x, order, candidates, 0, image, used, found);

  std::sort(found.begin(), found.end());
  return IsometryGroup{n, std::move(found)};
}

OrbitPartition iso_orbits(const IsometryGroup& group) {
  std::vector<Permutation> elems = group.elements;
  return orbits_of_family(group.n, elems);
}

OrbitPartition orbits_of_family(std::size_t n, const std::vector<Permutation>& family) {
  // Orbits under the generated subgroup are the connected components of the
  // undirected graph i -- g(i).
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& g : family) {
    if (g.size() != n) throw InputError("orbit family size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = find(i), b = find(g(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  OrbitPartition part;
  part.class_of.assign(n, 0);
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = find(i);
    auto it = root_to_class.find(r);
    if (it == root_to_class.end()) {
      it = root_to_class.emplace(r, part.classes.size()).first;
      part.classes.emplace_back();
    }
    part.class_of[i] = it->second;
    part.classes[it->second].push_back(i);
  }
  return part;
}

namespace {

std::vector<Permutation> close_under_products(std::size_t n, std::vector<Permutation> gens) {
  std::set<Permutation> closed;
  closed.insert(Permutation::identity(n));
  for (auto& g : gens) closed.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> snapshot(closed.begin(), closed.end());
    for (const auto& a : snapshot) {
      if (closed.insert(a.inverse()).second) grew = true;
      for (const auto& b : snapshot)
        if (closed.insert(a.then(b)).second) grew = true;
    }
  }
  return {closed.begin(), closed.end()};
}

std::vector<Permutation> all_bijections(std::size_t n) {
  if (n > 8) throw InputError("bijection family too large (n > 8)");
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool lip_within(const FiniteMetricSpace& x, const Permutation& u, const Rational& m) {
  // Both u and its inverse must have Lipschitz constant at most m:
  // d(u i, u j) <= m * d(i, j) and d(i, j) <= m * d(u i, u j).
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const Rational& a = x.dist(i, j);
      const Rational& b = x.dist(u(i), u(j));
      if (b > m * a || a > m * b) return false;
    }
  return true;
}

}  // namespace

std::vector<Permutation> alpha_family(const FiniteMetricSpace& x, const AlphaSpec& spec) {
  const std::size_t n = x.size();

  if (std::holds_alternative<AlphaIso>(spec)) return isometry_group(x).elements;

  if (std::holds_alternative<AlphaIsoInv>(spec)) {
    std::vector<Permutation> invs;
    for (const auto& g : isometry_group(x).elements)
      if (g.then(g).is_identity()) invs.push_back(g);
    return close_under_products(n, std::move(invs));
  }

  if (const auto* stab = std::get_if<AlphaIsoStab>(&spec)) {
    if (stab->fixed_pointwise.empty()) throw InputError("iso_stab: empty set");
    for (auto i : stab->fixed_pointwise)
      if (i >= n) throw InputError("iso_stab: index out of range");
    std::vector<Permutation> kept;
    for (const auto& g : isometry_group(x).elements) {
      bool fixes = true;
      for (auto i : stab->fixed_pointwise) fixes = fixes && g(i) == i;
      if (fixes) kept.push_back(g);
    }
    return kept;
  }

  if (const auto* fixed = std::get_if<AlphaIsoFixed>(&spec)) {
    std::set<std::size_t> a(fixed->preserved_set.begin(), fixed->preserved_set.end());
    if (a.empty()) throw InputError("iso_fixed: empty set");
    for (auto i : a)
      if (i >= n) throw InputError("iso_fixed: index out of range");
    std::vector<Permutation> kept;
    for (const auto& g : isometry_group(x).elements) {
      std::set<std::size_t> img;
      for (auto i : a) img.insert(g(i));
      if (img == a) kept.push_back(g);
    }
    return kept;
  }

  if (const auto* sub = std::get_if<AlphaSubgroup>(&spec)) {
    for (const auto& g : sub->generators) {
      if (g.size() != n) throw InputError("subgroup: permutation size mismatch");
      if (!preserves_dist(x, g)) throw InputError("subgroup: generator is not an isometry");
    }
    return close_under_products(n, sub->generators);
  }

  if (std::holds_alternative<AlphaHomeo>(spec)) return all_bijections(n);

  if (const auto* lip = std::get_if<AlphaLip>(&spec)) {
    if (lip->bound < Rational(1)) throw InputError("lip: bound must be at least 1");
    std::vector<Permutation> kept;
    for (auto& u : all_bijections(n))
      if (lip_within(x, u, lip->bound)) kept.push_back(std::move(u));
    return kept;
  }

  throw InputError("alpha_family: custom cost matrices carry no map family");
}

RationalMatrix alpha_matrix(const FiniteMetricSpace& x, const AlphaSpec& spec) {
  const std::size_t n = x.size();

  if (const auto* custom = std::get_if<AlphaCustom>(&spec)) {
    const RationalMatrix& c = custom->cost;
    if (c.size() != n) throw InputError("custom alpha: size mismatch");
    check_cost_matrix(c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (c[i][j].is_zero()) throw InputError("custom alpha: must separate points");
        if (c[i][j] > x.dist(i, j)) throw InputError("custom alpha: must not exceed the metric");
      }
    return c;
  }

  const auto family = alpha_family(x, spec);
  // min over (u, v) of d(u(x), v(y)) depends only on the image sets.
  std::vector<std::set<std::size_t>> images(n);
  for (const auto& u : family)
    for (std::size_t i = 0; i < n; ++i) images[i].insert(u(i));

  RationalMatrix a(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational best = x.dist(i, j);  // identity is always in the family
      for (auto p : images[i])
        for (auto q : images[j]) best = min(best, x.dist(p, q));
      a[i][j] = a[j][i] = best;
    }
  return a;
}

}  // namespace mgh
