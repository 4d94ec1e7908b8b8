#include <doctest.h>

#include <nlohmann/json.hpp>

#include "mgh/corpus.hpp"
#include "mgh/errors.hpp"
#include "mgh/isometry.hpp"
#include "test_support.hpp"

using namespace mgh;

TEST_CASE("every corpus space validates and rebuilds deterministically") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    CorpusObject a = build_example(name, Json::object());
    CorpusObject b = build_example(name, Json::object());
    CHECK(corpus_object_to_json(a) == corpus_object_to_json(b));
  }
  CHECK_THROWS_AS(build_example("no_such_example", Json::object()), InputError);
}

TEST_CASE("named corpus values") {
  SUBCASE("egyptian triangle has sides 3, 4, 5 and is iso-rigid") {
    CorpusObject obj = build_example("egyptian_triangle", Json::object());
    const auto* t = std::get_if<FiniteMetricSpace>(&obj);
    REQUIRE(t != nullptr);
    CHECK(diameter(*t) == Rational(5));
    CHECK(is_iso_rigid(*t));
    CHECK(iso_height(*t).height == 0);
  }

  SUBCASE("two triangles joined at r = 5/2 build a valid 6-point space") {
    CorpusObject obj = build_example("two_triangles_r", Json::object());
    const auto* u = std::get_if<FiniteMetricSpace>(&obj);
    REQUIRE(u != nullptr);
    CHECK(u->size() == 6);
    // Its derivative is the 5/2-equilateral triangle, which cannot embed back.
    DerivativeResult d = iso_derivative(*u);
    CHECK(d.quotient.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) CHECK(d.quotient.dist(i, j) == Rational(5, 2));
  }

  SUBCASE("height towers hit the requested heights") {
    for (std::size_t k = 1; k <= 4; ++k) {
      CorpusObject obj = build_example("height_tower", Json{{"k", k}});
      const auto* x = std::get_if<FiniteMetricSpace>(&obj);
      REQUIRE(x != nullptr);
      CHECK(iso_height(*x).height == k);
    }
  }

  SUBCASE("s3_dn is left-invariant and not bi-invariant") {
    CorpusObject obj = build_example("s3_dn", Json{{"n", 2}});
    const auto* g = std::get_if<FiniteMetricGroup>(&obj);
    REQUIRE(g != nullptr);
    CHECK(g->size() == 6);
    CHECK_FALSE(is_bi_invariant(*g));
    CHECK(g->dist(0, 1) == Rational(1, 2));      // same coset: rho = 0, delta/2
    CHECK(g->dist(0, 2) == Rational(3, 2));      // different coset: 1 + 1/2
  }

  SUBCASE("circle_discrete is a bi-invariant cyclic group") {
    CorpusObject obj = build_example("circle_discrete", Json{{"m", 6}, {"n", "2"}});
    const auto* g = std::get_if<FiniteMetricGroup>(&obj);
    REQUIRE(g != nullptr);
    CHECK(g->size() == 6);
    CHECK(is_bi_invariant(*g));
    CHECK(g->dist(0, 3) == Rational(6));  // 3 steps of the scaled path metric
  }

  SUBCASE("figure spaces validate") {
    for (const char* name : {"figure_a", "figure_b", "figure_c", "figure_d"}) {
      CorpusObject obj = build_example(name, Json::object());
      CHECK(std::get_if<FiniteMetricSpace>(&obj) != nullptr);
    }
  }
}

TEST_CASE("corpus registries are consistent") {
  for (auto& [name, x] : corpus_spaces()) {
    CAPTURE(name);
    CHECK(x.size() >= 1);
  }
  for (auto& [name, g] : corpus_groups()) {
    CAPTURE(name);
    CHECK(g.size() >= 2);
  }
  for (auto& [name, h] : corpus_homs()) {
    CAPTURE(name);
    CHECK(h.non_expansive);
    CHECK(h.surjective);
  }
}
