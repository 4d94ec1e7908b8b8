#include <doctest.h>

#include "mgh/errors.hpp"
#include "mgh/isometry.hpp"
#include "mgh/orders.hpp"
#include "test_support.hpp"

using namespace mgh;
using test::space_of;

namespace {

FiniteMetricSpace point() { return space_of({{0}}); }
FiniteMetricSpace egyptian() { return space_of({{0, 3, 5}, {3, 0, 4}, {5, 4, 0}}); }

// Flags recomputed from scratch, independent of the search.
void require_verified(const OrderVerdict& v, const FiniteMetricSpace& x,
                      const FiniteMetricSpace& y) {
  REQUIRE(v.holds);
  switch (v.relation) {
    case OrderRelation::preceq: {
      REQUIRE(v.witness_map.has_value());
      PointMap w = make_point_map(y, x, v.witness_map->image);
      CHECK(w.non_expansive);
      CHECK(w.surjective);
      break;
    }
    case OrderRelation::preceq_s: {
      REQUIRE(v.witness_map.has_value());
      REQUIRE(v.witness_subset.has_value());
      FiniteMetricSpace k = subspace(y, *v.witness_subset);
      PointMap w = make_point_map(k, x, v.witness_map->image);
      CHECK(w.non_expansive);
      CHECK(w.surjective);
      break;
    }
    case OrderRelation::preceq_i: {
      REQUIRE(v.witness_map.has_value());
      PointMap w = make_point_map(x, y, v.witness_map->image);
      CHECK(w.isometric);
      break;
    }
  }
}

}  // namespace

TEST_CASE("preceq named examples") {
  SUBCASE("a point sits below everything") {
    OrderVerdict v = preceq(point(), test::path4());
    require_verified(v, point(), test::path4());
  }

  SUBCASE("two points below a 3-point line") {
    FiniteMetricSpace x = space_of({{0, 1}, {1, 0}});
    FiniteMetricSpace y = test::line({0, 1, 2});
    OrderVerdict v = preceq(x, y);
    require_verified(v, x, y);
  }

  SUBCASE("a wide pair is not dominated by a narrow one") {
    CHECK_FALSE(preceq(space_of({{0, 10}, {10, 0}}), space_of({{0, 1}, {1, 0}})).holds);
  }
}

TEST_CASE("preceq_s and preceq_i named examples") {
  SUBCASE("the length-3 side embeds into the Egyptian triangle") {
    FiniteMetricSpace side = space_of({{0, 3}, {3, 0}});
    OrderVerdict v = preceq_i(side, egyptian());
    require_verified(v, side, egyptian());
    // Non-monotonicity of the height under embedding.
    CHECK(iso_height(side).height > iso_height(egyptian()).height);
  }

  SUBCASE("isometric spaces relate both ways") {
    FiniteMetricSpace a = test::path4();
    require_verified(preceq_i(a, a), a, a);
    require_verified(preceq_s(a, a), a, a);
    require_verified(preceq(a, a), a, a);
  }

  SUBCASE("no equilateral triple inside a short path") {
    FiniteMetricSpace eq = space_of({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK_FALSE(preceq_i(eq, test::line({0, 1, 2})).holds);
  }
}

TEST_CASE("an isometric embedding always yields subset domination") {
  // The reverse chain (preceq_s to preceq) fails on general finite spaces,
  // so consistency across all three orders is only asserted through the
  // common superspace below.
  test::SpaceGenerator gen(501);
  for (int round = 0; round < 25; ++round) {
    FiniteMetricSpace x = gen.next(4);
    FiniteMetricSpace y = gen.next(5);
    if (preceq_i(x, y).holds) CHECK(preceq_s(x, y).holds);
  }
}

TEST_CASE("reflexivity and transitivity on sampled triples") {
  test::SpaceGenerator gen(503);
  std::vector<FiniteMetricSpace> pool;
  for (int i = 0; i < 5; ++i) pool.push_back(gen.next(4));

  for (const auto& x : pool) {
    CHECK(preceq(x, x).holds);
    CHECK(preceq_s(x, x).holds);
    CHECK(preceq_i(x, x).holds);
  }
  for (auto rel : {OrderRelation::preceq, OrderRelation::preceq_s, OrderRelation::preceq_i})
    for (const auto& x : pool)
      for (const auto& y : pool)
        for (const auto& z : pool)
          if (decide_order(rel, x, y).holds && decide_order(rel, y, z).holds)
            CHECK(decide_order(rel, x, z).holds);
}

TEST_CASE("zero GH distance coincides with a two-way embedding on small pairs") {
  std::vector<FiniteMetricSpace> pool{point(), egyptian(), test::path4(),
                                      space_of({{0, 1}, {1, 0}}), test::line({0, 1, 2}),
                                      scale(egyptian(), Rational(2))};
  for (const auto& a : pool)
    for (const auto& b : pool) {
      bool isometric = preceq_i(a, b).holds && preceq_i(b, a).holds;
      CHECK((gh_exact(a, b).lower == Rational(0)) == isometric);
    }
}

TEST_CASE("uniform compactness reports") {
  SUBCASE("one-point families need a single net point") {
    UniformCompactnessReport rep =
        uniform_compactness({point(), point()}, {Rational(1, 2), Rational(2)});
    for (const auto& e : rep.per_epsilon) CHECK(e.n == 1);
    CHECK(rep.bounded_diam == Rational(0));
  }

  SUBCASE("discrete spaces need every point at eps = 1/2 and the report flags growth") {
    std::vector<FiniteMetricSpace> family;
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<std::string> labels;
      RationalMatrix d(n + 1, std::vector<Rational>(n + 1, Rational(0)));
      for (std::size_t i = 0; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        for (std::size_t j = 0; j <= n; ++j)
          if (i != j) d[i][j] = Rational(1);
      }
      family.push_back(validate_space(std::move(labels), std::move(d)));
    }
    UniformCompactnessReport rep = uniform_compactness(family, {Rational(1, 2)});
    REQUIRE(rep.per_epsilon.size() == 1);
    const auto& e = rep.per_epsilon[0];
    CHECK(e.n == 6);
    CHECK(e.member_sizes == std::vector<std::size_t>{2, 3, 4, 5, 6});
    CHECK(e.growing);
  }

  SUBCASE("scaled two-point spaces collapse to one net point for large eps") {
    std::vector<FiniteMetricSpace> family;
    FiniteMetricSpace two = space_of({{0, 1}, {1, 0}});
    for (long n = 1; n <= 4; ++n) family.push_back(scale(two, Rational(1, n)));
    UniformCompactnessReport rep = uniform_compactness(family, {Rational(2)});
    CHECK(rep.per_epsilon[0].n == 1);
    CHECK_FALSE(rep.per_epsilon[0].growing);
  }

  SUBCASE("every reported net is eps-dense and no larger than N") {
    test::SpaceGenerator gen(509);
    std::vector<FiniteMetricSpace> family;
    for (int i = 0; i < 4; ++i) family.push_back(gen.next(6));
    UniformCompactnessReport rep =
        uniform_compactness(family, {Rational(1, 2), Rational(1), Rational(3)});
    for (const auto& e : rep.per_epsilon)
      for (std::size_t k = 0; k < family.size(); ++k) {
        CHECK(e.nets[k].size() <= e.n);
        for (std::size_t p = 0; p < family[k].size(); ++p) {
          bool close = false;
          for (auto a : e.nets[k]) close = close || family[k].dist(p, a) < e.epsilon;
          CHECK(close);
        }
      }
  }
}

TEST_CASE("minimal nets are exactly minimal at desk scale") {
  // Greedy can overshoot; the exact search may not. Spot check a case where
  // a clever 2-net exists: points on a line covered by two centers.
  FiniteMetricSpace x = test::line({0, 1, 2, 3});
  auto net = minimal_epsilon_net(x, Rational(3, 2));
  CHECK(net.size() == 2);
}

TEST_CASE("common superspace dominates every member in all three orders") {
  std::vector<FiniteMetricSpace> family{egyptian(), egyptian()};
  CommonSuperspace super = common_superspace(family);
  CHECK(super.space.size() == 6);
  CHECK(super.parameter == Rational(5));

  for (std::size_t k = 0; k < family.size(); ++k) {
    CHECK(super.embeddings[k].isometric);
    CHECK(preceq(family[k], super.space).holds);
    CHECK(preceq_s(family[k], super.space).holds);
    CHECK(preceq_i(family[k], super.space).holds);
  }

  SUBCASE("single member families return the member") {
    CommonSuperspace one = common_superspace({egyptian()});
    CHECK(one.space == egyptian());
  }

  SUBCASE("two-point pair family") {
    std::vector<FiniteMetricSpace> pair{space_of({{0, 1}, {1, 0}}), space_of({{0, 2}, {2, 0}})};
    CommonSuperspace s = common_superspace(pair);
    CHECK(s.space.size() == 4);
    for (std::size_t k = 0; k < pair.size(); ++k) CHECK(preceq_i(pair[k], s.space).holds);
  }
}

TEST_CASE("monotone limits") {
  SUBCASE("decreasing derivative tower stabilizes exactly") {
    IhtResult tower = iso_height(test::path4());
    auto provider = [&](std::size_t n) {
      std::size_t k = std::min<std::size_t>(n - 1, tower.tower.size() - 1);
      return tower.tower[k];
    };
    MonotoneLimitReport rep = monotone_limit(provider, 6, MonotoneDirection::decreasing,
                                             std::nullopt, Rational(1, 10), 2);
    CHECK(rep.status == MonotoneLimitReport::Status::exact);
    REQUIRE(rep.object.has_value());
    CHECK(rep.object->size() == 1);
  }

  SUBCASE("constant chain is exact immediately") {
    FiniteMetricSpace x = egyptian();
    MonotoneLimitReport rep = monotone_limit([&](std::size_t) { return x; }, 4,
                                             MonotoneDirection::decreasing, std::nullopt,
                                             Rational(1, 10), 2);
    CHECK(rep.status == MonotoneLimitReport::Status::exact);
    CHECK(*rep.object == x);
  }

  SUBCASE("increasing bounded chain certifies a representative") {
    FiniteMetricSpace bound = space_of({{0, 1}, {1, 0}});
    auto provider = [&](std::size_t n) {
      return scale(bound, Rational(1) - Rational(1, static_cast<long>(n + 1)));
    };
    MonotoneLimitReport rep = monotone_limit(provider, 12, MonotoneDirection::increasing, bound,
                                             Rational(1, 10), 4);
    CHECK(rep.status == MonotoneLimitReport::Status::certified);
    CHECK(rep.object.has_value());
  }

  SUBCASE("a chain without witnesses is rejected") {
    auto provider = [&](std::size_t n) {
      return n % 2 == 0 ? space_of({{0, 10}, {10, 0}}) : space_of({{0, 1}, {1, 0}});
    };
    CHECK_THROWS_AS(monotone_limit(provider, 4, MonotoneDirection::decreasing, std::nullopt,
                                   Rational(1, 10), 2),
                    InputError);
  }

  SUBCASE("increasing chains require a bound") {
    FiniteMetricSpace x = space_of({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(monotone_limit([&](std::size_t) { return x; }, 3,
                                   MonotoneDirection::increasing, std::nullopt, Rational(1, 10),
                                   2),
                    InputError);
  }
}
