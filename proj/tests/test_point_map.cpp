#include <doctest.h>

#include "mgh/errors.hpp"
#include "mgh/permutation.hpp"
#include "mgh/point_map.hpp"
#include "test_support.hpp"

using namespace mgh;
using test::space_of;

TEST_CASE("permutations are checked bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InputError);
  CHECK_THROWS_AS(Permutation({0, 3}), InputError);

  Permutation rot({1, 2, 0});
  CHECK(rot.then(rot).image() == std::vector<std::size_t>{2, 0, 1});
  CHECK(rot.then(rot.inverse()).is_identity());
  CHECK(rot.inverse().image() == std::vector<std::size_t>{2, 0, 1});
  CHECK(Permutation::identity(4).is_identity());
  CHECK_THROWS_AS(rot.then(Permutation::identity(4)), InputError);
}

TEST_CASE("point map flags are recomputed, never trusted") {
  FiniteMetricSpace narrow = space_of({{0, 1}, {1, 0}});
  FiniteMetricSpace wide = space_of({{0, 5}, {5, 0}});

  PointMap expanding = make_point_map(narrow, wide, {0, 1});
  CHECK_FALSE(expanding.non_expansive);
  CHECK_FALSE(expanding.isometric);
  CHECK(expanding.surjective);

  PointMap contracting = make_point_map(wide, narrow, {0, 1});
  CHECK(contracting.non_expansive);
  CHECK_FALSE(contracting.isometric);

  PointMap constant = make_point_map(wide, narrow, {0, 0});
  CHECK(constant.non_expansive);
  CHECK_FALSE(constant.surjective);

  PointMap iso = make_point_map(narrow, narrow, {1, 0});
  CHECK(iso.isometric);
  CHECK(iso.non_expansive);  // isometric implies non-expansive
  CHECK(iso.surjective);

  CHECK_THROWS_AS(make_point_map(narrow, wide, {0}), InputError);
  CHECK_THROWS_AS(make_point_map(narrow, wide, {0, 7}), InputError);
}

TEST_CASE("composition chains checked maps") {
  FiniteMetricSpace a = test::line({0, 1, 2});
  FiniteMetricSpace b = space_of({{0, 1}, {1, 0}});
  FiniteMetricSpace c = space_of({{0}});

  PointMap f = make_point_map(a, b, {0, 1, 1});
  PointMap g = make_point_map(b, c, {0, 0});
  PointMap gf = compose(f, g);
  CHECK(gf.image == std::vector<std::size_t>{0, 0, 0});
  CHECK(gf.non_expansive);
  CHECK(gf.surjective);
  CHECK_THROWS_AS(compose(g, f), InputError);

  CHECK(identity_map(a).isometric);
}
