#include "mgh/corpus.hpp"

#include <nlohmann/json.hpp>

#include "mgh/disjoint_union.hpp"
#include "mgh/errors.hpp"
#include "mgh/isometry.hpp"

namespace mgh {

namespace {

Rational param_rational(const Json& params, const std::string& key, const std::string& fallback) {
  if (!params.is_object() || !params.contains(key)) return Rational::parse(fallback);
  const Json& v = params.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError("example parameter '" + key + "' must be a rational");
}

std::size_t param_size(const Json& params, const std::string& key, std::size_t fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  long v = params.at(key).get<long>();
  if (v < 1) throw InputError("example parameter '" + key + "' must be positive");
  return static_cast<std::size_t>(v);
}

FiniteMetricSpace line_space(std::vector<std::pair<std::string, Rational>> points) {
  std::vector<std::string> labels;
  RationalMatrix d(points.size(), std::vector<Rational>(points.size()));
  for (auto& [label, value] : points) labels.push_back(label);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j)
      d[i][j] = (points[i].second - points[j].second).abs();
  return validate_space(std::move(labels), std::move(d));
}

FiniteMetricSpace egyptian_triangle() {
  RationalMatrix d = {{Rational(0), Rational(3), Rational(5)},
                      {Rational(3), Rational(0), Rational(4)},
                      {Rational(5), Rational(4), Rational(0)}};
  return validate_space({"A", "B", "C"}, std::move(d));
}

FiniteMetricSpace two_points(const Rational& distance) {
  RationalMatrix d = {{Rational(0), distance}, {distance, Rational(0)}};
  return validate_space({"0", "1"}, std::move(d));
}

FiniteMetricSpace equilateral_triangle(const Rational& side) {
  RationalMatrix d = {{Rational(0), side, side}, {side, Rational(0), side}, {side, side, Rational(0)}};
  return validate_space({"a", "b", "c"}, std::move(d));
}

FiniteMetricSpace path4() {
  return line_space({{"0", Rational(0)}, {"1", Rational(1)}, {"2", Rational(2)}, {"3", Rational(3)}});
}

FiniteMetricSpace one_point() {
  return validate_space({"p"}, {{Rational(0)}});
}

/// {0} together with 1, 1/2, ..., 1/k on the line.
FiniteMetricSpace figure_b(std::size_t k) {
  std::vector<std::pair<std::string, Rational>> points{{"0", Rational(0)}};
  for (std::size_t i = 1; i <= k; ++i) {
    Rational v = Rational(1) / Rational(static_cast<long>(i));
    points.emplace_back(v.str(), v);
  }
  return line_space(std::move(points));
}

FiniteMetricSpace figure_c(std::size_t k) {
  AdmissibleUnionSpec spec;
  spec.components = {figure_b(k), one_point()};
  spec.params = {Rational(2)};
  return admissible_union(spec).space;
}

FiniteMetricSpace figure_d(std::size_t k) {
  return limit_tower_space({figure_b(k), scale(figure_b(k), Rational(1, 4))},
                           {Rational(2), Rational(1, 2)}, true);
}

FiniteMetricSpace two_triangles(const Rational& r) {
  AdmissibleUnionSpec spec;
  spec.components = {egyptian_triangle(), egyptian_triangle()};
  spec.params = {r};
  return admissible_union(spec).space;
}

FiniteMetricSpace height_tower(std::size_t k) {
  FiniteMetricSpace x = two_points(Rational(1));  // iht = 1
  for (std::size_t h = 1; h < k; ++h) x = successor_space(x, diameter(x) + Rational(1));
  return x;
}

// ---------------------------------------------------------------------------
// Groups.

struct S3Tables {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> inv;
  std::size_t coset_zero_a, coset_zero_b;  // elements x with rho(x, e) = 0
};

S3Tables s3_tables() {
  // Permutations of {0,1,2}; product a*b applies b first.
  const std::vector<std::vector<std::size_t>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  S3Tables t;
  t.labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto index_of = [&](const std::vector<std::size_t>& img) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == img) return i;
    throw InputError("s3: lookup failure");
  };
  t.mul.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> prod(3);
      for (std::size_t i = 0; i < 3; ++i) prod[i] = perms[a][perms[b][i]];
      t.mul[a][b] = index_of(prod);
    }
  t.inv.assign(6, 0);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      if (t.mul[a][b] == 0) t.inv[a] = b;
  t.coset_zero_a = 0;  // e
  t.coset_zero_b = 1;  // (12)
  return t;
}

/// rho(s, t) = 0 when t^{-1} s lies in {e, (12)}, and 1 otherwise; the
/// left-coset indicator pseudometric of the subgroup {e, (12)}.
RationalMatrix s3_rho(const S3Tables& t) {
  RationalMatrix rho(6, std::vector<Rational>(6, Rational(0)));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::size_t x = t.mul[t.inv[b]][a];
      rho[a][b] = (x == t.coset_zero_a || x == t.coset_zero_b) ? Rational(0) : Rational(1);
    }
  return rho;
}

RationalMatrix discrete_matrix(std::size_t n, const Rational& value) {
  RationalMatrix d(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d[i][j] = value;
  return d;
}

/// d_n = rho + delta / n on S3: left-invariant but not bi-invariant.
FiniteMetricGroup s3_dn(std::size_t n) {
  S3Tables t = s3_tables();
  RationalMatrix d = s3_rho(t);
  Rational step = Rational(1) / Rational(static_cast<long>(n));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      if (a != b) d[a][b] += step;
  return validate_group(t.labels, t.mul, std::move(d));
}

GroupSystemInput s3_system(std::size_t count) {
  S3Tables t = s3_tables();
  GroupSystemInput sys;
  sys.elements = t.labels;
  sys.mul = t.mul;
  for (std::size_t n = 1; n <= count; ++n)
    sys.metrics.push_back(s3_dn(n).metric().dist_matrix());
  // Closed forms: the hats (1 + 1/n) * delta decrease to delta, the metrics
  // rho + delta / n decrease to rho.
  sys.limit_hat = discrete_matrix(6, Rational(1));
  sys.limit_constraint = s3_rho(t);
  return sys;
}

std::vector<std::vector<std::size_t>> cyclic_mul(std::size_t n) {
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return mul;
}

std::vector<std::string> cyclic_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

/// Z_m with the m-gon path metric min(|i-j|, m-|i-j|), scaled by r.
FiniteMetricGroup circle_discrete(std::size_t m, const Rational& r) {
  if (m < 2) throw InputError("circle_discrete: need at least 2 points");
  RationalMatrix d(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) {
        std::size_t gap = i > j ? i - j : j - i;
        d[i][j] = Rational(static_cast<long>(std::min(gap, m - gap))) * r;
      }
  return validate_group(cyclic_labels(m), cyclic_mul(m), std::move(d));
}

GroupSystemInput z2_system(std::size_t count) {
  GroupSystemInput sys;
  sys.elements = cyclic_labels(2);
  sys.mul = cyclic_mul(2);
  for (std::size_t n = 1; n <= count; ++n) {
    Rational v = Rational(1) + Rational(1) / Rational(static_cast<long>(n));
    sys.metrics.push_back(discrete_matrix(2, v));
  }
  sys.limit_hat = discrete_matrix(2, Rational(1));
  sys.limit_constraint = discrete_matrix(2, Rational(1));
  return sys;
}

/// The inverse system of Z_{2^k} with the halving bonding maps; the maps
/// fail the homomorphism equation, which check_hom reports with a witness.
GroupBondSystem z2n_system(std::size_t depth) {
  GroupBondSystem sys;
  for (std::size_t k = 1; k <= depth; ++k) {
    std::size_t n = static_cast<std::size_t>(1) << k;
    sys.groups.push_back(
        validate_group(cyclic_labels(n), cyclic_mul(n), discrete_matrix(n, Rational(1))));
  }
  for (std::size_t k = 0; k + 1 < sys.groups.size(); ++k) {
    const std::size_t big = sys.groups[k + 1].size();
    const std::size_t small = sys.groups[k].size();
    std::vector<std::size_t> bond(big);
    for (std::size_t j = 0; j < big; ++j) bond[j] = (j % 2 == 0 ? j / 2 : j) % small;
    sys.bonds.push_back(std::move(bond));
  }
  return sys;
}

SystemDescription discrete_segment_system(std::size_t depth) {
  SystemDescription sys;
  sys.kind = "inverse";
  GrowthWitness growth;
  growth.epsilon = Rational(1, 2);
  for (std::size_t k = 1; k <= depth; ++k) {
    std::vector<std::string> labels(k + 1);
    for (std::size_t i = 0; i <= k; ++i) labels[i] = std::to_string(i);
    sys.spaces.push_back(validate_space(std::move(labels), discrete_matrix(k + 1, Rational(1))));
    growth.claims.push_back(GrowthWitnessClaim{k, k + 1});
  }
  for (std::size_t k = 1; k < depth; ++k) {
    // X^{k+1} -> X^k: identity below k, everything above collapses to 0.
    std::vector<std::size_t> bond(k + 2);
    for (std::size_t j = 0; j <= k + 1; ++j) bond[j] = j <= k ? j : 0;
    sys.bonds.push_back(std::move(bond));
  }
  sys.growth = std::move(growth);
  return sys;
}

}  // namespace

CorpusObject build_example(const std::string& name, const Json& params) {
  if (name == "egyptian_triangle") return egyptian_triangle();
  if (name == "two_points") return two_points(param_rational(params, "d", "1"));
  if (name == "equilateral_triangle")
    return equilateral_triangle(param_rational(params, "side", "1"));
  if (name == "path4") return path4();
  if (name == "two_triangles_r") return two_triangles(param_rational(params, "r", "5/2"));
  if (name == "figure_a") return one_point();
  if (name == "figure_b") return figure_b(param_size(params, "k", 4));
  if (name == "figure_c") return figure_c(param_size(params, "k", 3));
  if (name == "figure_d") return figure_d(param_size(params, "k", 3));
  if (name == "height_tower") return height_tower(param_size(params, "k", 2));
  if (name == "s3_dn") return s3_dn(param_size(params, "n", 1));
  if (name == "s3") return s3_system(param_size(params, "count", 4));
  if (name == "z2_system") return z2_system(param_size(params, "count", 4));
  if (name == "circle_discrete")
    return circle_discrete(param_size(params, "m", 6), param_rational(params, "n", "1"));
  if (name == "z2n_system") return z2n_system(param_size(params, "n", 3));
  if (name == "discrete_segment_system")
    return discrete_segment_system(param_size(params, "n", 4));
  throw InputError("unknown example '" + name + "'");
}

std::vector<std::string> corpus_names() {
  return {"egyptian_triangle", "two_points", "equilateral_triangle", "path4",
          "two_triangles_r",  "figure_a",   "figure_b",             "figure_c",
          "figure_d",         "height_tower", "s3_dn",              "s3",
          "z2_system",        "circle_discrete", "z2n_system",      "discrete_segment_system"};
}

Json corpus_object_to_json(const CorpusObject& object) {
  if (const auto* space = std::get_if<FiniteMetricSpace>(&object)) return space_to_json(*space);
  if (const auto* group = std::get_if<FiniteMetricGroup>(&object)) return group_to_json(*group);
  if (const auto* sys = std::get_if<SystemDescription>(&object)) return system_to_json(*sys);
  if (const auto* gsys = std::get_if<GroupSystemInput>(&object))
    return group_system_to_json(*gsys);
  if (const auto* bsys = std::get_if<GroupBondSystem>(&object))
    return group_bond_system_to_json(*bsys);
  throw InputError("corpus object not serializable");
}

std::vector<std::pair<std::string, FiniteMetricSpace>> corpus_spaces() {
  std::vector<std::pair<std::string, FiniteMetricSpace>> out;
  out.emplace_back("egyptian_triangle", egyptian_triangle());
  out.emplace_back("two_points", two_points(Rational(1)));
  out.emplace_back("equilateral_triangle", equilateral_triangle(Rational(1)));
  out.emplace_back("path4", path4());
  out.emplace_back("two_triangles_r", two_triangles(Rational(5, 2)));
  out.emplace_back("figure_a", one_point());
  out.emplace_back("figure_b", figure_b(4));
  out.emplace_back("figure_c", figure_c(3));
  out.emplace_back("figure_d", figure_d(3));
  out.emplace_back("height_tower_2", height_tower(2));
  out.emplace_back("height_tower_3", height_tower(3));
  return out;
}

std::vector<std::pair<std::string, FiniteMetricGroup>> corpus_groups() {
  std::vector<std::pair<std::string, FiniteMetricGroup>> out;
  out.emplace_back("s3_d1", s3_dn(1));
  out.emplace_back("s3_d2", s3_dn(2));
  out.emplace_back("s3_d3", s3_dn(3));
  out.emplace_back("s3_d10", s3_dn(10));
  S3Tables t = s3_tables();
  out.emplace_back("s3_discrete",
                   validate_group(t.labels, t.mul, discrete_matrix(6, Rational(1))));
  out.emplace_back("z2_discrete",
                   validate_group(cyclic_labels(2), cyclic_mul(2), discrete_matrix(2, Rational(1))));
  out.emplace_back("z4_discrete",
                   validate_group(cyclic_labels(4), cyclic_mul(4), discrete_matrix(4, Rational(1))));
  out.emplace_back("circle_6", circle_discrete(6, Rational(1)));
  out.emplace_back("circle_4_scaled", circle_discrete(4, Rational(3, 2)));
  return out;
}

std::vector<std::pair<std::string, GroupHom>> corpus_homs() {
  std::vector<std::pair<std::string, GroupHom>> out;
  S3Tables t = s3_tables();
  FiniteMetricGroup s3_discrete = validate_group(t.labels, t.mul, discrete_matrix(6, Rational(1)));
  FiniteMetricGroup s3_1 = s3_dn(1);
  FiniteMetricGroup z2 =
      validate_group(cyclic_labels(2), cyclic_mul(2), discrete_matrix(2, Rational(1)));
  FiniteMetricGroup z4 =
      validate_group(cyclic_labels(4), cyclic_mul(4), discrete_matrix(4, Rational(1)));

  std::vector<std::size_t> ident{0, 1, 2, 3, 4, 5};
  out.emplace_back("identity_s3_d1", check_hom(ident, s3_1, s3_1));

  // Sign map: transpositions to 1, the rest to 0.
  std::vector<std::size_t> sign{0, 1, 1, 1, 0, 0};
  out.emplace_back("sign_s3_d1_to_z2", check_hom(sign, s3_1, z2));
  out.emplace_back("sign_s3_discrete_to_z2", check_hom(sign, s3_discrete, z2));

  std::vector<std::size_t> mod2{0, 1, 0, 1};
  out.emplace_back("mod2_z4_to_z2", check_hom(mod2, z4, z2));
  return out;
}

}  // namespace mgh
