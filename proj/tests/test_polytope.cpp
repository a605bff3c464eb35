#include <doctest.h>

#include "hypertoric/polytope.hpp"

using namespace hypertoric;

namespace {

RatPoint pt(std::initializer_list<int> v) {
  RatPoint p;
  for (int x : v) p.push_back(Rational(x));
  return p;
}

}  // namespace

TEST_CASE("hull membership in the plane") {
  DegreePolytope P(2);
  P.add_point(pt({0, 0}));
  P.add_point(pt({2, 0}));
  P.add_point(pt({0, 2}));

  CHECK(P.contains_point(pt({1, 0})));
  CHECK(P.contains_point(pt({0, 0})));
  CHECK(P.contains_point({rat(1, 2), rat(1, 2)}));
  CHECK(!P.contains_point(pt({2, 1})));
  CHECK(!P.contains_point(pt({-1, 0})));
}

TEST_CASE("interior membership distinguishes the boundary") {
  DegreePolytope P(2);
  P.add_point(pt({0, 0}));
  P.add_point(pt({2, 0}));
  P.add_point(pt({0, 2}));
  P.add_point(pt({2, 2}));

  CHECK(P.contains_point_interior(pt({1, 1})));
  CHECK(!P.contains_point_interior(pt({0, 1})));  // on an edge
  CHECK(!P.contains_point_interior(pt({0, 0})));  // a vertex
  CHECK(!P.contains_point_interior(pt({3, 1})));

  // Degenerate (segment) hulls have empty interior.
  DegreePolytope S(2);
  S.add_point(pt({0, 0}));
  S.add_point(pt({2, 0}));
  CHECK(!S.contains_point_interior(pt({1, 0})));
}

TEST_CASE("hull margins are exact rationals") {
  DegreePolytope P(1);
  P.add_point({rat(1, 3)});
  P.add_point({rat(7, 2)});
  MarginResult m = hull_margin(P.points(), {rat(1, 2)}, {Rational(1)});
  REQUIRE(m.feasible);
  CHECK(m.margin == rat(7, 2) - rat(1, 2));
}

TEST_CASE("containment and Minkowski sums") {
  DegreePolytope A(1), B(1);
  A.add_point({Rational(0)});
  A.add_point({Rational(1)});
  B.add_point({Rational(-1)});
  B.add_point({Rational(2)});
  CHECK(B.contains(A));
  CHECK(!A.contains(B));
  DegreePolytope S = A.minkowski_sum(B);
  CHECK(S.contains_point({Rational(-1)}));
  CHECK(S.contains_point({Rational(3)}));
  CHECK(!S.contains_point({rat(-3, 2)}));
}
