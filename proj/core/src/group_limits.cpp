#include "mgh/errors.hpp"
#include "mgh/groups.hpp"

namespace mgh {

namespace {

bool pointwise_leq(const RationalMatrix& a, const RationalMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] > b[i][j]) return false;
  return true;
}

RationalMatrix pointwise_min(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = min(a[i][j], b[i][j]);
  return out;
}

}  // namespace

GroupLimitResult group_inductive_limit(const GroupSystemInput& input) {
  if (input.metrics.empty()) throw InputError("group_inductive_limit: empty metric prefix");

  // Shared carrier, identity bonds: each prefix entry must be a valid
  // metric group and the bonds non-expansive, i.e. d_{n+1} <= d_n.
  std::vector<FiniteMetricGroup> groups;
  for (const auto& m : input.metrics)
    groups.push_back(validate_group(input.elements, input.mul, m));
  for (std::size_t k = 0; k + 1 < input.metrics.size(); ++k)
    if (!pointwise_leq(input.metrics[k + 1], input.metrics[k]))
      throw InputError("group_inductive_limit: identity bond " + std::to_string(k + 1) +
                       " is expansive (metrics must decrease)");

  GroupLimitResult result;
  for (const auto& g : groups) result.hats.push_back(hat_metric(g).hat.dist_matrix());

  // Limit of the hat metrics: exact stabilization, or the supplied closed form.
  if (input.limit_hat) {
    result.hat_limit = *input.limit_hat;
    if (!pointwise_leq(result.hat_limit, result.hats.back()))
      throw InputError("group_inductive_limit: limit_hat exceeds a computed hat");
  } else if (result.hats.size() >= 2 &&
             result.hats.back() == result.hats[result.hats.size() - 2]) {
    result.hat_limit = result.hats.back();
  } else {
    result.note = "hat metrics do not stabilize and no closed-form limit was supplied";
    return result;
  }
  FiniteMetricGroup hat_group =
      validate_group(input.elements, input.mul, result.hat_limit);  // also checks metric axioms
  if (!is_bi_invariant(hat_group))
    throw InputError("group_inductive_limit: the hat limit must be bi-invariant");

  // Pointwise infimum of the d_n over the tail.
  RationalMatrix constraint;
  if (input.limit_constraint) {
    constraint = *input.limit_constraint;
    check_cost_matrix(constraint);
    if (constraint.size() != input.elements.size())
      throw InputError("group_inductive_limit: constraint size mismatch");
    if (!pointwise_leq(constraint, input.metrics.back()))
      throw InputError("group_inductive_limit: constraint exceeds a prefix metric");
  } else if (input.metrics.size() >= 2 &&
             input.metrics.back() == input.metrics[input.metrics.size() - 2]) {
    constraint = input.metrics.back();
  } else {
    result.note = "metrics do not stabilize and no closed-form infimum was supplied";
    return result;
  }

  result.floor_constraint = pointwise_min(constraint, result.hat_limit);
  PseudometricMatrix floor = left_invariant_floor(hat_group, result.floor_constraint);
  result.floor = floor.dist_matrix();
  for (std::size_t h = 0; h < hat_group.size(); ++h)
    if (floor.dist(h, hat_group.identity()).is_zero()) result.zero_set.push_back(h);

  result.quotient = group_quotient_metric(hat_group, floor);
  result.exact = true;
  result.note = "pipeline completed";
  return result;
}

}  // namespace mgh
