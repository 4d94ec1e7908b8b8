#ifndef MGH_SERIALIZATION_HPP
#define MGH_SERIALIZATION_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "mgh/disjoint_union.hpp"
#include "mgh/groups.hpp"
#include "mgh/gromov_hausdorff.hpp"
#include "mgh/isometry.hpp"
#include "mgh/metric_space.hpp"
#include "mgh/orders.hpp"
#include "mgh/quotient.hpp"
#include "mgh/systems.hpp"

namespace mgh {

using Json = nlohmann::json;

// Space JSON: {"labels": [...], "dist": [[rational strings or integers]]}.
// Rationals serialize as "p/q" ("p" when integral) and parse from "p/q",
// integers, or exact decimal strings like "2.5".
Json space_to_json(const FiniteMetricSpace& x);
FiniteMetricSpace space_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

// Group JSON: {"elements": [...], "mul": [[indices]], "dist": [[rationals]]}.
Json group_to_json(const FiniteMetricGroup& g);
FiniteMetricGroup group_from_json(const Json& j);

// AlphaSpec JSON: {"variant": "iso"|"iso_inv"|"iso_stab"|"iso_fixed"|
//                  "subgroup"|"homeo"|"lip"|"custom", ...payload}.
Json alpha_spec_to_json(const AlphaSpec& spec);
AlphaSpec alpha_spec_from_json(const Json& j);

// System JSON: {"kind": "direct"|"inverse", "spaces": [...], "bonds": [[...]],
//               optional "growth": growth witness}.
struct SystemDescription {
  std::string kind;  // "direct" | "inverse"
  std::vector<FiniteMetricSpace> spaces;
  std::vector<std::vector<std::size_t>> bonds;
  std::optional<GrowthWitness> growth;
};
Json system_to_json(const SystemDescription& s);
SystemDescription system_from_json(const Json& j);

Json growth_witness_to_json(const GrowthWitness& w);
GrowthWitness growth_witness_from_json(const Json& j);

// A plain list of spaces: {"spaces": [...]}.
std::vector<FiniteMetricSpace> family_from_json(const Json& j);
Json family_to_json(const std::vector<FiniteMetricSpace>& family);

// Group systems with shared carrier (identity bonds):
// {"elements": [...], "mul": [[...]], "metrics": [[[...]]],
//  optional "limit_hat", "limit_constraint"}.
Json group_system_to_json(const GroupSystemInput& s);
GroupSystemInput group_system_from_json(const Json& j);

// Group systems with explicit carriers and bonding maps.
struct GroupBondSystem {
  std::vector<FiniteMetricGroup> groups;
  std::vector<std::vector<std::size_t>> bonds;  // groups[i+1] -> groups[i]
};
Json group_bond_system_to_json(const GroupBondSystem& s);
GroupBondSystem group_bond_system_from_json(const Json& j);

Json point_map_to_json(const PointMap& m);
Json correspondence_to_json(const Correspondence& c);
Json gh_estimate_to_json(const GhEstimate& e);
Json convergence_report_to_json(const ConvergenceReport& r);
Json disjoint_sum_report_to_json(const DisjointSumReport& r);
Json order_verdict_to_json(const OrderVerdict& v);
Json derivative_to_json(const DerivativeResult& d);
Json iht_to_json(const IhtResult& r);
Json isometry_group_to_json(const IsometryGroup& g);
Json orbits_to_json(const OrbitPartition& p);
Json compactness_report_to_json(const UniformCompactnessReport& r);
Json superspace_to_json(const CommonSuperspace& s);
Json monotone_report_to_json(const MonotoneLimitReport& r);
Json group_hom_to_json(const GroupHom& h);
Json quotient_group_to_json(const QuotientGroupResult& q);
Json group_limit_to_json(const GroupLimitResult& r);
Json limit_approximation_to_json(const LimitApproximation& a);
Json inverse_limit_verdict_to_json(const InverseLimitVerdict& v);
Json admissible_union_to_json(const AdmissibleUnion& u);

}  // namespace mgh

#endif
