// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion. Exit code is the number of failures.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mgh/corpus.hpp"
#include "mgh/disjoint_union.hpp"
#include "mgh/errors.hpp"
#include "mgh/groups.hpp"
#include "mgh/gromov_hausdorff.hpp"
#include "mgh/isometry.hpp"
#include "mgh/orders.hpp"
#include "mgh/serialization.hpp"
#include "mgh/systems.hpp"
#include "test_support.hpp"

using namespace mgh;

namespace {

struct Failure {
  std::string message;
};

void check(bool cond, const std::string& msg) {
  if (!cond) throw Failure{msg};
}

int failures = 0;

void criterion(int num, const std::string& label, const std::function<void()>& body) {
  try {
    body();
    std::cout << "[PASS] " << num << ". " << label << "\n";
  } catch (const Failure& f) {
    ++failures;
    std::cout << "[FAIL] " << num << ". " << label << " -- " << f.message << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "[FAIL] " << num << ". " << label << " -- unexpected: " << e.what() << "\n";
  }
}

FiniteMetricSpace point_space() { return validate_space({"p"}, {{Rational(0)}}); }

FiniteMetricSpace two_point_space(const Rational& d) {
  return validate_space({"0", "1"}, {{Rational(0), d}, {d, Rational(0)}});
}

DirectSystemPrefix padded_tower(const FiniteMetricSpace& x) {
  IhtResult t = iso_height(x);
  std::vector<FiniteMetricSpace> spaces = t.tower;
  std::vector<std::vector<std::size_t>> bonds;
  for (const auto& p : t.projections) bonds.push_back(p.image);
  std::vector<std::size_t> ident(spaces.back().size());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  spaces.push_back(spaces.back());
  bonds.push_back(ident);
  return validate_direct_system(spaces, bonds);
}

}  // namespace

int main() {
  const auto spaces = corpus_spaces();
  const auto groups = corpus_groups();

  criterion(1, "pinned values: iht({0}) = 0, iht({0,1}) = 1, Egyptian triangle rigid", [&] {
    check(iso_height(point_space()).height == 0, "iht(point) != 0");
    check(iso_height(two_point_space(Rational(1))).height == 1, "iht(two points) != 1");
    CorpusObject obj = build_example("egyptian_triangle", Json::object());
    const auto& t = *std::get_if<FiniteMetricSpace>(&obj);
    check(is_iso_rigid(t), "Egyptian triangle not iso-rigid");
    check(iso_height(t).height == 0, "Egyptian triangle height != 0");
  });

  criterion(2, "oracle equivalence on 200 random spaces (n <= 7), exact", [&] {
    test::SpaceGenerator gen(20260810);
    for (int round = 0; round < 200; ++round) {
      FiniteMetricSpace x = gen.next(7);
      check(isometry_group(x).elements == test::brute_force_isometries(x),
            "isometry group mismatch vs n! filter");
      DerivativeResult a = iso_derivative(x);
      DerivativeResult b = alpha_derivative(x, AlphaIso{});
      check(a.quotient == b.quotient && a.projection.image == b.projection.image &&
                a.zero_classes == b.zero_classes,
            "alpha route disagrees with the orbit route");
    }
  });

  criterion(3, "successor law raises heights 1-3 by one at r = diam + 1", [&] {
    int covered = 0;
    for (const auto& [name, x] : spaces) {
      std::size_t h = iso_height(x).height;
      if (h < 1 || h > 3) continue;
      ++covered;
      FiniteMetricSpace s = successor_space(x, diameter(x) + Rational(1));
      check(iso_height(s).height == h + 1, name + ": successor height != h + 1");
    }
    check(covered >= 3, "corpus lacks spaces of heights 1-3");
  });

  criterion(4, "closure idempotent, maximal vs 100 minorants; quotient flags exact", [&] {
    std::mt19937 rng(404);
    std::uniform_int_distribution<long> num(0, 9);
    std::uniform_int_distribution<long> shrink(0, 4);
    for (int instance = 0; instance < 10; ++instance) {
      const std::size_t n = 6;
      RationalMatrix cost(n, std::vector<Rational>(n, Rational(0)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cost[i][j] = cost[j][i] = Rational(num(rng), 3);
      PseudometricMatrix closed = pseudometric_closure(cost);
      check(pseudometric_closure(closed.dist_matrix()) == closed, "closure not idempotent");
      for (int sample = 0; sample < 100; ++sample) {
        RationalMatrix m = cost;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            Rational f(shrink(rng), 4);
            m[i][j] = m[j][i] = cost[i][j] * f;
          }
        PseudometricMatrix q = pseudometric_closure(m);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            check(q.dist(i, j) <= closed.dist(i, j), "minorant escapes the closure");
      }
    }
    test::SpaceGenerator gen(405);
    for (int round = 0; round < 20; ++round) {
      FiniteMetricSpace x = gen.next(6);
      RationalMatrix cost = x.dist_matrix();
      std::uniform_int_distribution<long> s(0, 3);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
          Rational f(s(rng), 3);
          cost[i][j] = cost[j][i] = cost[i][j] * f;
        }
      DerivativeResult d = quotient_by_zero(x, pseudometric_closure(cost));
      check(d.projection.non_expansive, "quotient projection expands");
      check(d.projection.surjective, "quotient projection not onto");
    }
  });

  criterion(5, "GH suite: self-distance, point distance, pseudometric laws, brackets", [&] {
    for (const auto& [name, x] : spaces) {
      if (x.size() <= kGhDefaultSizeLimit)
        check(gh_exact(x, x).lower == Rational(0), name + ": gh(X, X) != 0");
      if (x.size() <= 5)
        check(gh_exact(point_space(), x).lower == diameter(x) / Rational(2),
              name + ": gh(point, X) != diam/2");
    }
    std::vector<FiniteMetricSpace> small;
    for (const auto& [name, x] : spaces)
      if (x.size() <= 4) small.push_back(x);
    for (const auto& a : small)
      for (const auto& b : small) {
        check(gh_exact(a, b).lower == gh_exact(b, a).lower, "gh not symmetric");
        for (const auto& c : small)
          check(gh_exact(a, c).lower <= gh_exact(a, b).lower + gh_exact(b, c).lower,
                "gh violates the triangle inequality");
      }
    for (const auto& [na, a] : spaces)
      for (const auto& [nb, b] : spaces) {
        if (a.size() > kGhDefaultSizeLimit || b.size() > kGhDefaultSizeLimit) continue;
        GhEstimate exact = gh_exact(a, b);
        GhEstimate bounds = gh_bounds(a, b);
        check(bounds.lower <= exact.lower && exact.upper <= bounds.upper,
              na + " vs " + nb + ": bounds do not bracket the exact value");
      }
  });

  criterion(6, "order suite: reflexive, transitive, superspace dominates, height jump", [&] {
    for (const auto& [name, x] : spaces) {
      check(preceq(x, x).holds, name + ": preceq not reflexive");
      check(preceq_s(x, x).holds, name + ": preceq_s not reflexive");
      check(preceq_i(x, x).holds, name + ": preceq_i not reflexive");
    }
    std::vector<FiniteMetricSpace> small;
    for (const auto& [name, x] : spaces)
      if (x.size() <= 5) small.push_back(x);
    for (auto rel : {OrderRelation::preceq, OrderRelation::preceq_s, OrderRelation::preceq_i})
      for (const auto& a : small)
        for (const auto& b : small)
          for (const auto& c : small)
            if (decide_order(rel, a, b).holds && decide_order(rel, b, c).holds)
              check(decide_order(rel, a, c).holds, "transitivity fails");

    std::vector<FiniteMetricSpace> family;
    for (const auto& [name, x] : spaces)
      if (x.size() <= 4) family.push_back(x);
    CommonSuperspace super = common_superspace(family);
    for (const auto& member : family) {
      check(preceq(member, super.space).holds, "superspace: preceq fails");
      check(preceq_s(member, super.space).holds, "superspace: preceq_s fails");
      check(preceq_i(member, super.space).holds, "superspace: preceq_i fails");
    }

    FiniteMetricSpace side = two_point_space(Rational(3));
    CorpusObject obj = build_example("egyptian_triangle", Json::object());
    const auto& t = *std::get_if<FiniteMetricSpace>(&obj);
    check(preceq_i(side, t).holds, "the length-3 side does not embed");
    check(iso_height(side).height == 1 && iso_height(t).height == 0,
          "embedded height not larger than ambient height");
  });

  criterion(7, "hat suite with the exact S3 values and 50 majorants per group", [&] {
    for (const auto& [name, g] : groups) {
      HatMetricResult hat = hat_metric(g);
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
          check(hat.hat.dist(a, b) >= g.dist(a, b), name + ": hat below d");
      FiniteMetricGroup hatted = g.with_metric(hat.hat);
      check(is_bi_invariant(hatted), name + ": hat not bi-invariant");
      check(hat_metric(hatted).hat.dist_matrix() == hat.hat.dist_matrix(),
            name + ": hat not idempotent");
      check((hat.hat.dist_matrix() == g.metric().dist_matrix()) == is_bi_invariant(g),
            name + ": hat fixpoint test fails");

      std::mt19937 rng(707);
      std::uniform_int_distribution<long> bump(0, 5);
      const std::size_t n = g.size();
      const RationalMatrix& hm = hat.hat.dist_matrix();
      for (int sample = 0; sample < 50; ++sample) {
        std::vector<Rational> len(n, Rational(0));
        for (std::size_t x = 1; x < n; ++x) len[x] = hm[g.identity()][x] + Rational(bump(rng), 4);
        for (std::size_t x = 0; x < n; ++x) len[x] = max(len[x], len[g.inv(x)]);
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t x = 0; x < n; ++x) {
            std::size_t conj = g.mul(g.mul(c, x), g.inv(c));
            len[conj] = max(len[conj], len[x]);
          }
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
              if (len[x] + len[y] < len[g.mul(x, y)]) {
                len[g.mul(x, y)] = len[x] + len[y];
                changed = true;
              }
        }
        RationalMatrix rho(n, std::vector<Rational>(n));
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) rho[a][b] = len[g.mul(g.inv(a), b)];
        FiniteMetricGroup sampled = validate_group(g.elements(), g.mul_table(), rho);
        check(is_bi_invariant(sampled), name + ": sampled majorant not bi-invariant");
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            check(rho[a][b] >= hm[a][b], name + ": bi-invariant majorant below the hat");
      }
    }

    for (const auto& [name, hom] : corpus_homs())
      check(hat_lemma_check(hom), name + ": hat lemma fails");

    for (long n : {1L, 2L, 3L, 10L}) {
      CorpusObject obj = build_example("s3_dn", Json{{"n", n}});
      const auto& g = *std::get_if<FiniteMetricGroup>(&obj);
      RationalMatrix expected(6, std::vector<Rational>(6, Rational(0)));
      for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
          if (a != b) expected[a][b] = Rational(1) + Rational(1, n);
      check(hat_metric(g).hat.dist_matrix() == expected,
            "hat(rho + delta/" + std::to_string(n) + ") != (1 + 1/" + std::to_string(n) +
                ") delta");
    }
  });

  criterion(8, "S3 pipeline: floor constraint rho, zero set {id,(12)}, closure S3, trivial", [&] {
    CorpusObject obj = build_example("s3", Json::object());
    const auto& sys = *std::get_if<GroupSystemInput>(&obj);
    GroupLimitResult r = group_inductive_limit(sys);
    check(r.exact, "pipeline did not complete");
    check(r.floor_constraint == *sys.limit_constraint, "floor constraint != rho");
    check(r.floor == *sys.limit_constraint, "floor != rho");
    check(r.zero_set == std::vector<std::size_t>{0, 1}, "zero set != {id, (12)}");
    check(r.quotient->normal_subgroup.size() == 6, "normal closure != S3");
    check(r.quotient->quotient.size() == 1, "limit object is not the trivial group");
  });

  criterion(9, "inverse-limit criterion: segment system refuted, bounded systems pass", [&] {
    CorpusObject obj = build_example("discrete_segment_system", Json{{"n", 5}});
    const auto& seg = *std::get_if<SystemDescription>(&obj);
    validate_inverse_system(seg.spaces, seg.bonds);
    check(seg.growth.has_value() && seg.growth->epsilon == Rational(1, 2),
          "corpus growth witness missing");
    InverseLimitVerdict refuted = inverse_limit_exists(seg.spaces, seg.growth);
    check(!refuted.exists, "segment system not refuted");

    FiniteMetricSpace x = two_point_space(Rational(1));
    InverseLimitVerdict constant = inverse_limit_exists({x, x, x}, std::nullopt);
    check(constant.exists, "constant system refused");
    for (const auto& o : constant.member_orders) check(o.holds, "bound witness fails an order");

    std::vector<FiniteMetricSpace> scaled;
    for (long n = 1; n <= 4; ++n) scaled.push_back(scale(x, Rational(1, n)));
    InverseLimitVerdict sc = inverse_limit_exists(scaled, std::nullopt);
    check(sc.exists, "scaled system refused");
    for (const auto& o : sc.member_orders) check(o.holds, "scaled bound witness fails an order");
  });

  criterion(10, "limit machinery: exact towers, unique mediators, bond independence", [&] {
    for (const auto& [name, x] : spaces) {
      DirectSystemPrefix sys = padded_tower(x);
      LimitApproximation lim = direct_limit_approx(sys, Rational(1, 10), 2);
      check(lim.status == LimitApproximation::Status::exact, name + ": tower not exact");
      check(is_iso_rigid(*lim.object), name + ": limit object not rigid");
      for (const auto& f : lim.arrows)
        check(f.non_expansive && f.surjective, name + ": arrow flags wrong");
    }

    // Mediating maps: for each small tower and each candidate cone target
    // with at most 4 points, every cone admits exactly one commuting
    // non-expansive map out of the limit object.
    std::vector<FiniteMetricSpace> zs;
    for (const auto& [name, z] : spaces)
      if (z.size() <= 4) zs.push_back(z);
    for (const auto& [name, x] : spaces) {
      if (x.size() > 5) continue;
      DirectSystemPrefix sys = padded_tower(x);
      LimitApproximation lim = direct_limit_approx(sys, Rational(1, 10), 2);
      for (const auto& z : zs) {
        const std::size_t n1 = sys.spaces[0].size();
        std::size_t total = 1;
        for (std::size_t i = 0; i < n1; ++i) total *= z.size();
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<std::size_t> h1(n1);
          std::size_t c = code;
          for (std::size_t i = 0; i < n1; ++i) {
            h1[i] = c % z.size();
            c /= z.size();
          }
          if (!make_point_map(sys.spaces[0], z, h1).non_expansive) continue;
          bool cone = true;
          std::vector<std::vector<std::size_t>> h(sys.spaces.size());
          h[0] = h1;
          for (std::size_t k = 1; k < sys.spaces.size() && cone; ++k) {
            PointMap fk = sys.composite(1, k + 1);
            h[k].assign(sys.spaces[k].size(), z.size());
            for (std::size_t i = 0; i < n1; ++i) {
              std::size_t tgt = fk.image[i];
              if (h[k][tgt] == z.size())
                h[k][tgt] = h1[i];
              else if (h[k][tgt] != h1[i])
                cone = false;
            }
            if (cone) cone = make_point_map(sys.spaces[k], z, h[k]).non_expansive;
          }
          if (!cone) continue;
          std::size_t found = 0;
          std::size_t nu_total = 1;
          for (std::size_t i = 0; i < lim.object->size(); ++i) nu_total *= z.size();
          for (std::size_t nc = 0; nc < nu_total; ++nc) {
            std::vector<std::size_t> nu(lim.object->size());
            std::size_t c2 = nc;
            for (std::size_t i = 0; i < nu.size(); ++i) {
              nu[i] = c2 % z.size();
              c2 /= z.size();
            }
            bool commutes = true;
            for (std::size_t k = 0; k < sys.spaces.size() && commutes; ++k)
              for (std::size_t i = 0; i < sys.spaces[k].size() && commutes; ++i)
                commutes = nu[lim.arrows[k].image[i]] == h[k][i];
            if (commutes && make_point_map(*lim.object, z, nu).non_expansive) ++found;
          }
          check(found == 1, name + ": mediating map not unique");
        }
      }
    }

    // Independence of the bond choice for the path4 tower.
    FiniteMetricSpace x = test::path4();
    IhtResult tower = iso_height(x);
    const FiniteMetricSpace& mid = tower.tower[1];
    const FiniteMetricSpace& end = tower.tower[2];
    std::vector<std::size_t> collapse(mid.size(), 0);
    std::vector<std::size_t> ident{0};
    int alternatives = 0;
    std::vector<std::size_t> img(x.size());
    std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
      if (i == x.size()) {
        PointMap m = make_point_map(x, mid, img);
        if (!m.non_expansive || !m.surjective) return;
        ++alternatives;
        DirectSystemPrefix sys =
            validate_direct_system({x, mid, end, end}, {img, collapse, ident});
        LimitApproximation lim = direct_limit_approx(sys, Rational(1, 10), 2);
        check(lim.status == LimitApproximation::Status::exact, "alternative tower not exact");
        check(gh_exact(*lim.object, end).lower == Rational(0),
              "limit object depends on the bond choice");
        return;
      }
      for (std::size_t j = 0; j < mid.size(); ++j) {
        img[i] = j;
        enumerate(i + 1);
      }
    };
    enumerate(0);
    check(alternatives > 1, "no alternative bonds found");
  });

  criterion(11, "certificates: {0, 1/n} at tol 1/10 with tail <= 11; disjoint sums", [&] {
    ConvergenceReport rep = gh_convergence_certificate(
        [](std::size_t n) {
          return validate_space({"0", "x"}, {{Rational(0), Rational(1, static_cast<long>(n))},
                                             {Rational(1, static_cast<long>(n)), Rational(0)}});
        },
        12, Rational(1, 10), 5);
    check(rep.certified, "two-point sequence not certified");
    check(rep.certificate->tail_index <= 11, "tail index exceeds 11");
    for (const auto& [m, n, b] : rep.certificate->pair_bounds)
      check(b <= Rational(1, 10), "certificate bound exceeds the tolerance");

    FiniteMetricSpace x = two_point_space(Rational(2));
    CorpusObject obj = build_example("equilateral_triangle", Json::object());
    const auto& y = *std::get_if<FiniteMetricSpace>(&obj);
    DisjointSumReport ds = verify_disjoint_sum_convergence(
        [&](std::size_t n) { return scale(x, Rational(1) + Rational(1, static_cast<long>(n))); },
        [&](std::size_t) { return y; }, x, y, Rational(3), Rational(1, 10), 12);
    check(ds.certified, "disjoint sums not certified at tol 1/10");
    for (const auto& row : ds.rows)
      check(row.within_sum, "union distance exceeds the sum of component distances");
  });

  criterion(12, "scaling equivariance of the height at r in {1/3, 2, 7/5}", [&] {
    for (const auto& [name, x] : spaces) {
      std::size_t h = iso_height(x).height;
      for (const Rational& r : {Rational(1, 3), Rational(2), Rational(7, 5)})
        check(iso_height(scale(x, r)).height == h, name + ": height changed under scaling");
    }
  });

  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed\n");
  return failures;
}
