#ifndef MGH_GROUPS_HPP
#define MGH_GROUPS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mgh/metric_space.hpp"
#include "mgh/pseudometric.hpp"

namespace mgh {

/// A finite group together with a left-invariant metric on its elements.
/// Construction runs the full axiom check, so instances are always valid.
class FiniteMetricGroup {
public:
  std::size_t size() const { return metric_.size(); }
  const std::vector<std::string>& elements() const { return metric_.labels(); }
  const std::vector<std::vector<std::size_t>>& mul_table() const { return mul_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const { return identity_; }
  const FiniteMetricSpace& metric() const { return metric_; }
  const Rational& dist(std::size_t a, std::size_t b) const { return metric_.dist(a, b); }

  /// Same group, different (already validated) left-invariant metric.
  FiniteMetricGroup with_metric(FiniteMetricSpace m) const;

private:
  FiniteMetricGroup(std::vector<std::vector<std::size_t>> mul, std::vector<std::size_t> inv,
                    std::size_t identity, FiniteMetricSpace metric)
      : mul_(std::move(mul)), inv_(std::move(inv)), identity_(identity),
        metric_(std::move(metric)) {}

  friend FiniteMetricGroup validate_group(std::vector<std::string> elements,
                                          std::vector<std::vector<std::size_t>> mul,
                                          RationalMatrix metric);

  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
  std::size_t identity_;
  FiniteMetricSpace metric_;
};

/// Checks the group axioms on the table and left-invariance of the metric.
/// Throws AssociativityError, IdentityError, InverseError or
/// LeftInvarianceError with witnesses (metric axioms via validate_space).
FiniteMetricGroup validate_group(std::vector<std::string> elements,
                                 std::vector<std::vector<std::size_t>> mul,
                                 RationalMatrix metric);

/// Right-invariance; left-invariance already holds for every valid group.
bool is_bi_invariant(const FiniteMetricGroup& g);

struct HatMetricResult {
  FiniteMetricSpace hat;
};

/// hat(g1, g2) = max over h of d(g1 h, g2 h): the smallest bi-invariant
/// metric above a left-invariant one. Verifies hat >= d and bi-invariance
/// of the result before returning.
HatMetricResult hat_metric(const FiniteMetricGroup& g);

struct GroupHom {
  FiniteMetricGroup source;
  FiniteMetricGroup target;
  std::vector<std::size_t> image;
  bool non_expansive = false;
  bool surjective = false;

  std::size_t operator()(std::size_t g) const { return image[g]; }
};

/// Verifies the homomorphism equation and recomputes the flags.
/// Throws NotHomomorphismError(g1, g2) with the first failing pair.
GroupHom check_hom(const std::vector<std::size_t>& map, const FiniteMetricGroup& g,
                   const FiniteMetricGroup& h);

/// For a non-expansive surjective homomorphism: is the same map still
/// non-expansive once both sides carry their hat metrics?
bool hat_lemma_check(const GroupHom& hom);

/// The greatest left-invariant pseudometric pointwise below the constraint.
/// Computed on the length function f(x) = d(e, x): clamp below the
/// translate minimum of the constraint, symmetrize over x <-> x^{-1}, then
/// close under factorizations (shortest paths on the Cayley graph).
PseudometricMatrix left_invariant_floor(const FiniteMetricGroup& g,
                                        const RationalMatrix& constraint);

/// Least normal subgroup containing the set, by saturation under products,
/// inverses and conjugation. Returns sorted element indices.
std::vector<std::size_t> normal_closure(const std::vector<std::size_t>& s,
                                        const FiniteMetricGroup& g);

struct QuotientGroupResult {
  std::vector<std::size_t> normal_subgroup;
  std::vector<std::vector<std::size_t>> cosets;  // ordered by smallest member
  FiniteMetricGroup quotient;
  GroupHom projection;
};

/// Quotient by the normal closure of the zero set of p, with the coset
/// infimum metric d([g],[h]) = min over n1, n2 of p(g n1, h n2).
/// p must be a left-invariant pseudometric pointwise below the group metric.
QuotientGroupResult group_quotient_metric(const FiniteMetricGroup& g,
                                          const PseudometricMatrix& p);

// ---------------------------------------------------------------------------
// Inductive limits of eventually-constant-carrier systems (identity bonds).

struct GroupSystemInput {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> mul;
  /// Metric prefix d_1 >= d_2 >= ... (identity bonds must be non-expansive).
  std::vector<RationalMatrix> metrics;
  /// Closed-form limit of the hat metrics, when the hats do not stabilize.
  std::optional<RationalMatrix> limit_hat;
  /// Closed-form pointwise infimum of the d_n over the whole tail.
  std::optional<RationalMatrix> limit_constraint;
};

struct GroupLimitResult {
  bool exact = false;
  std::string note;
  std::vector<RationalMatrix> hats;   // hat of each prefix metric
  RationalMatrix hat_limit;           // the bi-invariant limit metric used
  RationalMatrix floor_constraint;    // min(infimum constraint, hat limit)
  RationalMatrix floor;               // greatest left-invariant pseudometric below it
  std::vector<std::size_t> zero_set;  // of the floor, against the identity
  std::optional<QuotientGroupResult> quotient;
};

/// Pipeline: hat the metrics, take the limit bi-invariant metric, floor the
/// pointwise infimum constraint, divide by the normal closure of its zero
/// set, and install the coset metric. Inconclusive (exact = false, no
/// quotient) when neither stabilization nor a closed form pins the limits.
GroupLimitResult group_inductive_limit(const GroupSystemInput& input);

}  // namespace mgh

#endif
