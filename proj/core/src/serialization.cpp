#include "mgh/serialization.hpp"

#include <nlohmann/json.hpp>

#include "mgh/errors.hpp"

namespace mgh {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational as \"p/q\" string or integer");
}

std::vector<std::size_t> indices_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an index array");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw InputError("expected a nonnegative index");
    long n = v.get<long>();
    if (n < 0) throw InputError("expected a nonnegative index");
    out.push_back(static_cast<std::size_t>(n));
  }
  return out;
}

}  // namespace

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a matrix (array of arrays)");
  RationalMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("expected a matrix row");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(rational_from_json(v));
    m.push_back(std::move(r));
  }
  return m;
}

Json space_to_json(const FiniteMetricSpace& x) {
  return Json{{"labels", x.labels()}, {"dist", matrix_to_json(x.dist_matrix())}};
}

FiniteMetricSpace space_from_json(const Json& j) {
  if (!j.contains("labels") || !j.contains("dist"))
    throw InputError("space JSON needs \"labels\" and \"dist\"");
  return validate_space(j.at("labels").get<std::vector<std::string>>(),
                        matrix_from_json(j.at("dist")));
}

Json group_to_json(const FiniteMetricGroup& g) {
  Json mul = Json::array();
  for (const auto& row : g.mul_table()) mul.push_back(row);
  return Json{{"elements", g.elements()},
              {"mul", std::move(mul)},
              {"dist", matrix_to_json(g.metric().dist_matrix())}};
}

FiniteMetricGroup group_from_json(const Json& j) {
  if (!j.contains("elements") || !j.contains("mul") || !j.contains("dist"))
    throw InputError("group JSON needs \"elements\", \"mul\" and \"dist\"");
  std::vector<std::vector<std::size_t>> mul;
  for (const auto& row : j.at("mul")) mul.push_back(indices_from_json(row));
  return validate_group(j.at("elements").get<std::vector<std::string>>(), std::move(mul),
                        matrix_from_json(j.at("dist")));
}

Json alpha_spec_to_json(const AlphaSpec& spec) {
  Json j;
  if (std::holds_alternative<AlphaIso>(spec)) {
    j["variant"] = "iso";
  } else if (std::holds_alternative<AlphaIsoInv>(spec)) {
    j["variant"] = "iso_inv";
  } else if (const auto* stab = std::get_if<AlphaIsoStab>(&spec)) {
    j["variant"] = "iso_stab";
    j["set"] = stab->fixed_pointwise;
  } else if (const auto* fixed = std::get_if<AlphaIsoFixed>(&spec)) {
    j["variant"] = "iso_fixed";
    j["set"] = fixed->preserved_set;
  } else if (const auto* sub = std::get_if<AlphaSubgroup>(&spec)) {
    j["variant"] = "subgroup";
    Json gens = Json::array();
    for (const auto& p : sub->generators) gens.push_back(p.image());
    j["generators"] = std::move(gens);
  } else if (std::holds_alternative<AlphaHomeo>(spec)) {
    j["variant"] = "homeo";
  } else if (const auto* lip = std::get_if<AlphaLip>(&spec)) {
    j["variant"] = "lip";
    j["M"] = lip->bound.str();
  } else if (const auto* custom = std::get_if<AlphaCustom>(&spec)) {
    j["variant"] = "custom";
    j["cost"] = matrix_to_json(custom->cost);
  }
  return j;
}

AlphaSpec alpha_spec_from_json(const Json& j) {
  const std::string variant = j.at("variant").get<std::string>();
  if (variant == "iso") return AlphaIso{};
  if (variant == "iso_inv") return AlphaIsoInv{};
  if (variant == "iso_stab") return AlphaIsoStab{indices_from_json(j.at("set"))};
  if (variant == "iso_fixed") return AlphaIsoFixed{indices_from_json(j.at("set"))};
  if (variant == "subgroup") {
    AlphaSubgroup sub;
    for (const auto& img : j.at("generators")) sub.generators.emplace_back(indices_from_json(img));
    return sub;
  }
  if (variant == "homeo") return AlphaHomeo{};
  if (variant == "lip") return AlphaLip{rational_from_json(j.at("M"))};
  if (variant == "custom") return AlphaCustom{matrix_from_json(j.at("cost"))};
  throw InputError("unknown alpha variant '" + variant + "'");
}

Json growth_witness_to_json(const GrowthWitness& w) {
  Json claims = Json::array();
  for (const auto& c : w.claims) claims.push_back(Json{c.index, c.min_net_at_least});
  return Json{{"epsilon", w.epsilon.str()}, {"claims", std::move(claims)}};
}

GrowthWitness growth_witness_from_json(const Json& j) {
  GrowthWitness w;
  w.epsilon = rational_from_json(j.at("epsilon"));
  for (const auto& c : j.at("claims")) {
    auto pair = indices_from_json(c);
    if (pair.size() != 2) throw InputError("growth claim must be [index, bound]");
    w.claims.push_back(GrowthWitnessClaim{pair[0], pair[1]});
  }
  return w;
}

Json system_to_json(const SystemDescription& s) {
  Json spaces = Json::array();
  for (const auto& x : s.spaces) spaces.push_back(space_to_json(x));
  Json bonds = Json::array();
  for (const auto& b : s.bonds) bonds.push_back(b);
  Json j{{"kind", s.kind}, {"spaces", std::move(spaces)}, {"bonds", std::move(bonds)}};
  if (s.growth) j["growth"] = growth_witness_to_json(*s.growth);
  return j;
}

SystemDescription system_from_json(const Json& j) {
  SystemDescription s;
  s.kind = j.at("kind").get<std::string>();
  if (s.kind != "direct" && s.kind != "inverse")
    throw InputError("system kind must be \"direct\" or \"inverse\"");
  for (const auto& x : j.at("spaces")) s.spaces.push_back(space_from_json(x));
  for (const auto& b : j.at("bonds")) s.bonds.push_back(indices_from_json(b));
  if (j.contains("growth")) s.growth = growth_witness_from_json(j.at("growth"));
  return s;
}

std::vector<FiniteMetricSpace> family_from_json(const Json& j) {
  if (!j.contains("spaces")) throw InputError("family JSON needs \"spaces\"");
  std::vector<FiniteMetricSpace> out;
  for (const auto& x : j.at("spaces")) out.push_back(space_from_json(x));
  return out;
}

Json family_to_json(const std::vector<FiniteMetricSpace>& family) {
  Json spaces = Json::array();
  for (const auto& x : family) spaces.push_back(space_to_json(x));
  return Json{{"spaces", std::move(spaces)}};
}

Json group_system_to_json(const GroupSystemInput& s) {
  Json mul = Json::array();
  for (const auto& row : s.mul) mul.push_back(row);
  Json metrics = Json::array();
  for (const auto& m : s.metrics) metrics.push_back(matrix_to_json(m));
  Json j{{"elements", s.elements}, {"mul", std::move(mul)}, {"metrics", std::move(metrics)}};
  if (s.limit_hat) j["limit_hat"] = matrix_to_json(*s.limit_hat);
  if (s.limit_constraint) j["limit_constraint"] = matrix_to_json(*s.limit_constraint);
  return j;
}

GroupSystemInput group_system_from_json(const Json& j) {
  GroupSystemInput s;
  s.elements = j.at("elements").get<std::vector<std::string>>();
  for (const auto& row : j.at("mul")) s.mul.push_back(indices_from_json(row));
  for (const auto& m : j.at("metrics")) s.metrics.push_back(matrix_from_json(m));
  if (j.contains("limit_hat")) s.limit_hat = matrix_from_json(j.at("limit_hat"));
  if (j.contains("limit_constraint"))
    s.limit_constraint = matrix_from_json(j.at("limit_constraint"));
  return s;
}

Json group_bond_system_to_json(const GroupBondSystem& s) {
  Json groups = Json::array();
  for (const auto& g : s.groups) groups.push_back(group_to_json(g));
  Json bonds = Json::array();
  for (const auto& b : s.bonds) bonds.push_back(b);
  return Json{{"groups", std::move(groups)}, {"bonds", std::move(bonds)}};
}

GroupBondSystem group_bond_system_from_json(const Json& j) {
  GroupBondSystem s;
  for (const auto& g : j.at("groups")) s.groups.push_back(group_from_json(g));
  for (const auto& b : j.at("bonds")) s.bonds.push_back(indices_from_json(b));
  return s;
}

Json point_map_to_json(const PointMap& m) {
  return Json{{"image", m.image},
              {"non_expansive", m.non_expansive},
              {"surjective", m.surjective},
              {"isometric", m.isometric}};
}

Json correspondence_to_json(const Correspondence& c) {
  Json pairs = Json::array();
  for (const auto& [i, j] : c.pairs) pairs.push_back(Json{i, j});
  return pairs;
}

Json gh_estimate_to_json(const GhEstimate& e) {
  Json j{{"lower", e.lower.str()}, {"upper", e.upper.str()}, {"exact", e.exact}};
  if (e.witness) j["witness"] = correspondence_to_json(*e.witness);
  return j;
}

Json convergence_report_to_json(const ConvergenceReport& r) {
  Json j{{"certified", r.certified}};
  if (r.certificate) {
    Json bounds = Json::array();
    for (const auto& [m, n, b] : r.certificate->pair_bounds) bounds.push_back(Json{m, n, b.str()});
    j["certificate"] = Json{{"tail_index", r.certificate->tail_index},
                            {"tolerance", r.certificate->tolerance.str()},
                            {"pair_bounds", std::move(bounds)}};
  }
  if (r.violation) {
    const auto& [m, n, b] = *r.violation;
    j["violation"] = Json{m, n, b.str()};
  }
  return j;
}

Json disjoint_sum_report_to_json(const DisjointSumReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"index", row.index},
                        {"union_distance", row.union_distance.str()},
                        {"sum_distance", row.sum_distance.str()},
                        {"within_sum", row.within_sum}});
  Json j{{"rows", std::move(rows)}, {"certified", r.certified}};
  if (r.certified) j["tail_index"] = r.tail_index;
  return j;
}

Json order_verdict_to_json(const OrderVerdict& v) {
  Json j{{"relation", relation_name(v.relation)}, {"holds", v.holds}};
  Json witness;
  if (v.witness_map) witness["map"] = point_map_to_json(*v.witness_map);
  if (v.witness_subset) witness["subset"] = *v.witness_subset;
  if (!witness.is_null()) j["witness"] = std::move(witness);
  return j;
}

Json derivative_to_json(const DerivativeResult& d) {
  Json classes = Json::array();
  for (const auto& cls : d.zero_classes) classes.push_back(cls);
  return Json{{"quotient", space_to_json(d.quotient)},
              {"projection", point_map_to_json(d.projection)},
              {"classes", std::move(classes)}};
}

Json iht_to_json(const IhtResult& r) {
  Json tower = Json::array();
  for (const auto& x : r.tower) tower.push_back(space_to_json(x));
  Json projections = Json::array();
  for (const auto& p : r.projections) projections.push_back(point_map_to_json(p));
  return Json{{"height", r.height}, {"tower", std::move(tower)},
              {"projections", std::move(projections)}};
}

Json isometry_group_to_json(const IsometryGroup& g) {
  Json elems = Json::array();
  for (const auto& p : g.elements) elems.push_back(p.image());
  return Json{{"n", g.n}, {"order", g.elements.size()}, {"elements", std::move(elems)}};
}

Json orbits_to_json(const OrbitPartition& p) {
  Json classes = Json::array();
  for (const auto& cls : p.classes) classes.push_back(cls);
  return Json{{"class_of", p.class_of}, {"classes", std::move(classes)}};
}

Json compactness_report_to_json(const UniformCompactnessReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.per_epsilon) {
    Json nets = Json::array();
    for (const auto& net : e.nets) nets.push_back(net);
    entries.push_back(Json{{"epsilon", e.epsilon.str()},
                           {"N", e.n},
                           {"nets", std::move(nets)},
                           {"member_sizes", e.member_sizes},
                           {"growing", e.growing}});
  }
  return Json{{"bounded_diam", r.bounded_diam.str()}, {"per_epsilon", std::move(entries)}};
}

Json superspace_to_json(const CommonSuperspace& s) {
  Json embeddings = Json::array();
  for (const auto& e : s.embeddings) embeddings.push_back(point_map_to_json(e));
  return Json{{"space", space_to_json(s.space)},
              {"embeddings", std::move(embeddings)},
              {"parameter", s.parameter.str()}};
}

Json monotone_report_to_json(const MonotoneLimitReport& r) {
  Json j;
  switch (r.status) {
    case MonotoneLimitReport::Status::exact: j["status"] = "exact"; break;
    case MonotoneLimitReport::Status::certified: j["status"] = "certified"; break;
    case MonotoneLimitReport::Status::inconclusive: j["status"] = "inconclusive"; break;
  }
  if (r.object) j["object"] = space_to_json(*r.object);
  if (r.convergence) j["convergence"] = convergence_report_to_json(*r.convergence);
  j["note"] = r.note;
  return j;
}

Json group_hom_to_json(const GroupHom& h) {
  return Json{{"image", h.image},
              {"non_expansive", h.non_expansive},
              {"surjective", h.surjective}};
}

Json quotient_group_to_json(const QuotientGroupResult& q) {
  Json cosets = Json::array();
  for (const auto& c : q.cosets) cosets.push_back(c);
  return Json{{"normal_subgroup", q.normal_subgroup},
              {"cosets", std::move(cosets)},
              {"quotient", group_to_json(q.quotient)},
              {"projection", group_hom_to_json(q.projection)}};
}

Json group_limit_to_json(const GroupLimitResult& r) {
  Json j{{"exact", r.exact}, {"note", r.note}};
  Json hats = Json::array();
  for (const auto& h : r.hats) hats.push_back(matrix_to_json(h));
  j["hats"] = std::move(hats);
  if (!r.hat_limit.empty()) j["hat_limit"] = matrix_to_json(r.hat_limit);
  if (!r.floor_constraint.empty()) j["floor_constraint"] = matrix_to_json(r.floor_constraint);
  if (!r.floor.empty()) j["floor"] = matrix_to_json(r.floor);
  j["zero_set"] = r.zero_set;
  if (r.quotient) j["quotient"] = quotient_group_to_json(*r.quotient);
  return j;
}

Json limit_approximation_to_json(const LimitApproximation& a) {
  Json j;
  switch (a.status) {
    case LimitApproximation::Status::exact: j["status"] = "exact"; break;
    case LimitApproximation::Status::certified: j["status"] = "certified"; break;
    case LimitApproximation::Status::inconclusive: j["status"] = "inconclusive"; break;
    case LimitApproximation::Status::refused: j["status"] = "refused"; break;
  }
  if (a.object) j["object"] = space_to_json(*a.object);
  Json arrows = Json::array();
  for (const auto& f : a.arrows) arrows.push_back(point_map_to_json(f));
  j["arrows"] = std::move(arrows);
  if (a.convergence) j["convergence"] = convergence_report_to_json(*a.convergence);
  j["note"] = a.note;
  return j;
}

Json inverse_limit_verdict_to_json(const InverseLimitVerdict& v) {
  Json j{{"exists", v.exists}, {"reason", v.reason}};
  if (v.bound_witness) j["bound_witness"] = superspace_to_json(*v.bound_witness);
  if (v.growth) j["growth"] = growth_witness_to_json(*v.growth);
  Json orders = Json::array();
  for (const auto& o : v.member_orders) orders.push_back(order_verdict_to_json(o));
  j["member_orders"] = std::move(orders);
  return j;
}

Json admissible_union_to_json(const AdmissibleUnion& u) {
  return Json{{"space", space_to_json(u.space)},
              {"component_of", u.component_of},
              {"warnings", u.warnings}};
}

}  // namespace mgh
