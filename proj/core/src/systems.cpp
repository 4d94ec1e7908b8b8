#include "mgh/systems.hpp"

#include "mgh/errors.hpp"

namespace mgh {

namespace {

PointMap checked_bond(const FiniteMetricSpace& from, const FiniteMetricSpace& to,
                      const std::vector<std::size_t>& image, std::size_t index) {
  PointMap bond = make_point_map(from, to, image);
  if (!bond.surjective) throw NonSurjectiveBondError(index);
  if (!bond.non_expansive) {
    for (std::size_t i = 0; i < from.size(); ++i)
      for (std::size_t j = i + 1; j < from.size(); ++j)
        if (to.dist(image[i], image[j]) > from.dist(i, j)) throw ExpansiveBondError(index, i, j);
  }
  return bond;
}

}  // namespace

DirectSystemPrefix validate_direct_system(std::vector<FiniteMetricSpace> spaces,
                                          const std::vector<std::vector<std::size_t>>& bonds) {
  if (spaces.empty()) throw InputError("direct system: no spaces");
  if (bonds.size() + 1 != spaces.size())
    throw CoherenceError("direct system: need exactly one bond per consecutive pair");

  DirectSystemPrefix prefix;
  prefix.spaces = std::move(spaces);
  for (std::size_t n = 0; n < bonds.size(); ++n) {
    if (bonds[n].size() != prefix.spaces[n].size())
      throw CoherenceError("direct system: bond " + std::to_string(n + 1) +
                           " does not match its source");
    prefix.bonds.push_back(checked_bond(prefix.spaces[n], prefix.spaces[n + 1], bonds[n], n + 1));
  }
  return prefix;
}

PointMap DirectSystemPrefix::composite(std::size_t m, std::size_t n) const {
  if (m < 1 || n < m || n > spaces.size()) throw InputError("composite: bad indices");
  PointMap f = identity_map(spaces[m - 1]);
  for (std::size_t k = m; k < n; ++k) f = compose(f, bonds[k - 1]);
  return f;
}

InverseSystemPrefix validate_inverse_system(std::vector<FiniteMetricSpace> spaces,
                                            const std::vector<std::vector<std::size_t>>& bonds) {
  if (spaces.empty()) throw InputError("inverse system: no spaces");
  if (bonds.size() + 1 != spaces.size())
    throw CoherenceError("inverse system: need exactly one bond per consecutive pair");

  InverseSystemPrefix prefix;
  prefix.spaces = std::move(spaces);
  for (std::size_t n = 0; n < bonds.size(); ++n) {
    if (bonds[n].size() != prefix.spaces[n + 1].size())
      throw CoherenceError("inverse system: bond " + std::to_string(n + 1) +
                           " does not match its source");
    prefix.bonds.push_back(checked_bond(prefix.spaces[n + 1], prefix.spaces[n], bonds[n], n + 1));
  }
  return prefix;
}

PointMap InverseSystemPrefix::composite(std::size_t n, std::size_t m) const {
  if (m < 1 || n < m || n > spaces.size()) throw InputError("composite: bad indices");
  PointMap f = identity_map(spaces[n - 1]);
  for (std::size_t k = n; k > m; --k) f = compose(f, bonds[k - 2]);
  return f;
}

namespace {

bool is_bijective_isometry(const PointMap& m) {
  return m.isometric && m.surjective && m.source.size() == m.target.size();
}

}  // namespace

LimitApproximation direct_limit_approx(const DirectSystemPrefix& prefix, const Rational& tol,
                                       std::size_t window) {
  const std::size_t n = prefix.spaces.size();
  LimitApproximation out;

  if (n == 1 || is_bijective_isometry(prefix.bonds.back())) {
    // Bonds stabilized: the last space is the limit object and the
    // composites are its arrows.
    out.status = LimitApproximation::Status::exact;
    out.object = prefix.spaces.back();
    for (std::size_t m = 1; m <= n; ++m) out.arrows.push_back(prefix.composite(m, n));
    std::size_t stable = n;
    while (stable > 1 && is_bijective_isometry(prefix.bonds[stable - 2])) --stable;
    out.note = "bonds are bijective isometries from index " + std::to_string(stable);
    return out;
  }

  ConvergenceReport conv = gh_convergence_certificate(
      [&](std::size_t k) { return prefix.spaces[k - 1]; }, n, tol, window);
  if (conv.certified) {
    out.status = LimitApproximation::Status::certified;
    out.object = prefix.spaces[conv.certificate->tail_index - 1];
    out.convergence = std::move(conv);
    out.note = "tail representative within tolerance; no exact arrows";
  } else {
    out.status = LimitApproximation::Status::inconclusive;
    out.convergence = std::move(conv);
    out.note = "prefix neither stabilizes nor certifies at this tolerance";
  }
  return out;
}

InverseLimitVerdict inverse_limit_exists(const std::vector<FiniteMetricSpace>& spaces,
                                         const std::optional<GrowthWitness>& growth) {
  if (spaces.empty()) throw InputError("inverse_limit_exists: empty family");

  InverseLimitVerdict verdict;
  if (growth) {
    if (growth->claims.size() < 2)
      throw InputError("growth witness: need at least two claims");
    std::size_t prev_bound = 0;
    std::size_t prev_index = 0;
    for (const auto& claim : growth->claims) {
      if (claim.index < 1 || claim.index > spaces.size())
        throw InputError("growth witness: claim index out of prefix range");
      if (claim.index <= prev_index || claim.min_net_at_least <= prev_bound)
        throw InputError("growth witness: claims must strictly increase");
      auto net = minimal_epsilon_net(spaces[claim.index - 1], growth->epsilon);
      if (net.size() < claim.min_net_at_least)
        throw InputError("growth witness: claim at index " + std::to_string(claim.index) +
                         " is not supported by the space");
      prev_bound = claim.min_net_at_least;
      prev_index = claim.index;
    }
    verdict.exists = false;
    verdict.growth = growth;
    verdict.reason = "epsilon-net sizes at epsilon = " + growth->epsilon.str() +
                     " grow without bound (uniform compactness fails)";
    return verdict;
  }

  CommonSuperspace bound = common_superspace(spaces);
  for (const auto& member : spaces) {
    for (auto rel : {OrderRelation::preceq, OrderRelation::preceq_s, OrderRelation::preceq_i}) {
      OrderVerdict v = decide_order(rel, member, bound.space);
      if (!v.holds)
        throw ValidationError("inverse_limit_exists: bound witness failed re-verification");
      verdict.member_orders.push_back(std::move(v));
    }
  }
  verdict.exists = true;
  verdict.bound_witness = std::move(bound);
  verdict.reason = "finite family bounded by its admissible union";
  return verdict;
}

LimitApproximation inverse_limit_approx(const InverseSystemPrefix& prefix, const Rational& tol,
                                        std::size_t window,
                                        const std::optional<GrowthWitness>& growth) {
  LimitApproximation out;
  InverseLimitVerdict verdict = inverse_limit_exists(prefix.spaces, growth);
  if (!verdict.exists) {
    out.status = LimitApproximation::Status::refused;
    out.note = "no inverse limit: " + verdict.reason;
    return out;
  }

  const std::size_t n = prefix.spaces.size();
  if (n == 1 || is_bijective_isometry(prefix.bonds.back())) {
    out.status = LimitApproximation::Status::exact;
    out.object = prefix.spaces.back();
    for (std::size_t m = 1; m <= n; ++m) out.arrows.push_back(prefix.composite(n, m));
    out.note = "bonds stabilized; arrows are the composites from the deepest space";
    return out;
  }

  ConvergenceReport conv = gh_convergence_certificate(
      [&](std::size_t k) { return prefix.spaces[k - 1]; }, n, tol, window);
  if (conv.certified) {
    out.status = LimitApproximation::Status::certified;
    out.object = prefix.spaces[conv.certificate->tail_index - 1];
    out.convergence = std::move(conv);
    out.note = "tail representative within tolerance; no exact arrows";
  } else {
    out.status = LimitApproximation::Status::inconclusive;
    out.convergence = std::move(conv);
    out.note = "prefix neither stabilizes nor certifies at this tolerance";
  }
  return out;
}

}  // namespace mgh
