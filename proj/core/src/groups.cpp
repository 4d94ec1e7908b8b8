#include "mgh/groups.hpp"

#include <algorithm>
#include <set>

#include "mgh/errors.hpp"

namespace mgh {

FiniteMetricGroup FiniteMetricGroup::with_metric(FiniteMetricSpace m) const {
  if (m.size() != size()) throw InputError("with_metric: size mismatch");
  FiniteMetricGroup g(mul_, inv_, identity_, std::move(m));
  for (std::size_t h = 0; h < g.size(); ++h)
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        if (g.dist(g.mul(h, a), g.mul(h, b)) != g.dist(a, b))
          throw LeftInvarianceError(h, a, b);
  return g;
}

FiniteMetricGroup validate_group(std::vector<std::string> elements,
                                 std::vector<std::vector<std::size_t>> mul,
                                 RationalMatrix metric) {
  const std::size_t n = elements.size();
  if (mul.size() != n) throw InputError("validate_group: table size mismatch");
  for (const auto& row : mul) {
    if (row.size() != n) throw InputError("validate_group: table is not square");
    for (auto v : row)
      if (v >= n) throw InputError("validate_group: table entry out of range");
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw AssociativityError(a, b, c);

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = mul[e][a] == a && mul[a][e] == a;
    if (ok) identity = e;
  }
  if (identity == n) throw IdentityError();

  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (mul[a][b] == identity && mul[b][a] == identity) {
        inv[a] = b;
        break;
      }
    if (inv[a] == n) throw InverseError(a);
  }

  FiniteMetricSpace space = validate_space(std::move(elements), std::move(metric));
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (space.dist(mul[h][a], mul[h][b]) != space.dist(a, b))
          throw LeftInvarianceError(h, a, b);

  return FiniteMetricGroup(std::move(mul), std::move(inv), identity, std::move(space));
}

bool is_bi_invariant(const FiniteMetricGroup& g) {
  for (std::size_t h = 0; h < g.size(); ++h)
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = 0; b < g.size(); ++b)
        if (g.dist(g.mul(a, h), g.mul(b, h)) != g.dist(a, b)) return false;
  return true;
}

HatMetricResult hat_metric(const FiniteMetricGroup& g) {
  const std::size_t n = g.size();
  RationalMatrix hat(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Rational best = g.dist(a, b);
      for (std::size_t h = 0; h < n; ++h) best = max(best, g.dist(g.mul(a, h), g.mul(b, h)));
      hat[a][b] = hat[b][a] = best;
    }

  FiniteMetricSpace hat_space = validate_space(g.elements(), std::move(hat));
  FiniteMetricGroup hat_group = g.with_metric(hat_space);  // rechecks left-invariance
  if (!is_bi_invariant(hat_group))
    throw ValidationError("hat_metric: result failed the bi-invariance check");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (hat_space.dist(a, b) < g.dist(a, b))
        throw ValidationError("hat_metric: result dropped below the input metric");
  return HatMetricResult{std::move(hat_space)};
}

GroupHom check_hom(const std::vector<std::size_t>& map, const FiniteMetricGroup& g,
                   const FiniteMetricGroup& h) {
  if (map.size() != g.size()) throw InputError("check_hom: wrong map length");
  for (auto v : map)
    if (v >= h.size()) throw InputError("check_hom: image out of range");

  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) throw NotHomomorphismError(a, b);

  GroupHom hom{g, h, map, true, false};
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a + 1; b < g.size(); ++b)
      if (h.dist(map[a], map[b]) > g.dist(a, b)) {
        hom.non_expansive = false;
        break;
      }
  std::vector<bool> hit(h.size(), false);
  for (auto v : map) hit[v] = true;
  hom.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return hom;
}

bool hat_lemma_check(const GroupHom& hom) {
  if (!hom.non_expansive || !hom.surjective)
    throw InputError("hat_lemma_check: hypothesis needs a non-expansive surjective hom");
  FiniteMetricSpace hat_g = hat_metric(hom.source).hat;
  FiniteMetricSpace hat_h = hat_metric(hom.target).hat;
  for (std::size_t a = 0; a < hom.source.size(); ++a)
    for (std::size_t b = a + 1; b < hom.source.size(); ++b)
      if (hat_h.dist(hom.image[a], hom.image[b]) > hat_g.dist(a, b)) return false;
  return true;
}

PseudometricMatrix left_invariant_floor(const FiniteMetricGroup& g,
                                        const RationalMatrix& constraint) {
  const std::size_t n = g.size();
  if (constraint.size() != n) throw InputError("left_invariant_floor: size mismatch");
  check_cost_matrix(constraint);

  // Largest admissible length function below the constraint's translates.
  std::vector<Rational> f(n);
  for (std::size_t x = 0; x < n; ++x) {
    Rational best = constraint[0][g.mul(0, x)];
    for (std::size_t h = 0; h < n; ++h) best = min(best, constraint[h][g.mul(h, x)]);
    f[x] = best;
  }
  for (std::size_t x = 0; x < n; ++x) f[x] = min(f[x], f[g.inv(x)]);

  // Subadditive closure: relax f(x*y) <= f(x) + f(y) to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Rational via = f[x] + f[y];
        std::size_t xy = g.mul(x, y);
        if (via < f[xy]) {
          f[xy] = via;
          changed = true;
        }
      }
  }
  if (!f[g.identity()].is_zero())
    throw ValidationError("left_invariant_floor: length of the identity must be zero");

  RationalMatrix p(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p[a][b] = f[g.mul(g.inv(a), b)];
  return validate_pseudometric(std::move(p));
}

std::vector<std::size_t> normal_closure(const std::vector<std::size_t>& s,
                                        const FiniteMetricGroup& g) {
  for (auto v : s)
    if (v >= g.size()) throw InputError("normal_closure: index out of range");

  std::set<std::size_t> closed(s.begin(), s.end());
  closed.insert(g.identity());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> snapshot(closed.begin(), closed.end());
    for (auto x : snapshot) {
      grew |= closed.insert(g.inv(x)).second;
      for (auto y : snapshot) grew |= closed.insert(g.mul(x, y)).second;
      for (std::size_t c = 0; c < g.size(); ++c)
        grew |= closed.insert(g.mul(g.mul(c, x), g.inv(c))).second;
    }
  }
  return {closed.begin(), closed.end()};
}

QuotientGroupResult group_quotient_metric(const FiniteMetricGroup& g,
                                          const PseudometricMatrix& p) {
  const std::size_t n = g.size();
  if (p.size() != n) throw InputError("group_quotient_metric: size mismatch");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (p.dist(a, b) > g.dist(a, b))
        throw InputError("group_quotient_metric: p must not exceed the group metric");
      for (std::size_t h = 0; h < n; ++h)
        if (p.dist(g.mul(h, a), g.mul(h, b)) != p.dist(a, b))
          throw InputError("group_quotient_metric: p is not left-invariant");
    }

  std::vector<std::size_t> zero_set;
  for (std::size_t h = 0; h < n; ++h)
    if (p.dist(h, g.identity()).is_zero()) zero_set.push_back(h);
  std::vector<std::size_t> normal = normal_closure(zero_set, g);

  // Cosets of the normal subgroup, ordered by smallest member.
  std::set<std::size_t> in_normal(normal.begin(), normal.end());
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset_of(n, unassigned);
  std::vector<std::vector<std::size_t>> cosets;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset_of[a] != unassigned) continue;
    std::vector<std::size_t> members;
    for (auto m : normal) members.push_back(g.mul(a, m));
    std::sort(members.begin(), members.end());
    for (auto m : members) coset_of[m] = cosets.size();
    cosets.push_back(std::move(members));
  }

  const std::size_t q = cosets.size();
  std::vector<std::string> labels(q);
  for (std::size_t c = 0; c < q; ++c) {
    std::string smallest = g.elements()[cosets[c][0]];
    for (auto m : cosets[c]) smallest = std::min(smallest, g.elements()[m]);
    labels[c] = smallest;
  }

  std::vector<std::vector<std::size_t>> qmul(q, std::vector<std::size_t>(q));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) qmul[a][b] = coset_of[g.mul(cosets[a][0], cosets[b][0])];

  RationalMatrix qd(q, std::vector<Rational>(q, Rational(0)));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      Rational best = p.dist(cosets[a][0], cosets[b][0]);
      for (auto x : cosets[a])
        for (auto y : cosets[b]) best = min(best, p.dist(x, y));
      qd[a][b] = qd[b][a] = best;
    }

  FiniteMetricGroup quotient = validate_group(std::move(labels), std::move(qmul), std::move(qd));
  GroupHom projection = check_hom(coset_of, g, quotient);
  return QuotientGroupResult{std::move(normal), std::move(cosets), std::move(quotient),
                             std::move(projection)};
}

}  // namespace mgh
