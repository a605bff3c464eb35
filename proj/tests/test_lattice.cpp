#include <doctest.h>

#include <random>

#include "hypertoric/algebra.hpp"

using namespace hypertoric;

namespace {

CharLattice th_lattice() { return CharLattice({"t", "hbar"}, 2); }

LaurentPoly parse(const CharLattice& lat, const std::string& s) {
  return parse_laurent(lat, s);
}

LaurentPoly random_poly(std::mt19937_64& rng, const CharLattice& lat, bool integer_coeffs,
                        bool skip_trivial) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<Int> expo(-3, 3);
  std::uniform_int_distribution<Int> coeff(-3, 3);
  LaurentPoly p(lat);
  int m = nterms(rng);
  for (int i = 0; i < m; ++i) {
    ExpVec e = lat.zero();
    for (int a = 0; a < lat.rank(); ++a) e[static_cast<size_t>(a)] = expo(rng) * lat.scale();
    if (skip_trivial && is_zero(e)) continue;
    Int c = coeff(rng);
    if (c == 0) c = 1;
    p.add_term(e, integer_coeffs ? rat(c) : rat(c, 2));
  }
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic and canonical form") {
  CharLattice lat = th_lattice();
  LaurentPoly f = parse(lat, "1 - t*hbar^-1 + 1/2*t^(3/2)");
  CHECK(f.term_count() == 3);
  CHECK(to_string(f) == "1 - t*hbar^-1 + 1/2*t^(3/2)");
  CHECK(parse(lat, to_string(f)) == f);

  LaurentPoly g = parse(lat, "1 + t");
  CHECK(to_string(g * g) == "1 + 2*t + t^2");
  CHECK((g - g).is_zero());
}

TEST_CASE("canonical round trip on random input") {
  CharLattice lat = th_lattice();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly f = random_poly(rng, lat, false, false);
    CHECK(parse(lat, to_string(f)) == f);
  }
}

TEST_CASE("wedge_star on the worked products") {
  CharLattice lat = th_lattice();
  // t + hbar t^{-1}  ->  (1 - t)(1 - hbar t^{-1})
  RationalChar w = wedge_star(parse(lat, "t + hbar*t^-1"));
  CHECK(w.den().is_one());
  CHECK(w.num() == parse(lat, "1 - t") * parse(lat, "1 - hbar*t^-1"));

  // empty class -> 1
  CHECK(wedge_star(LaurentPoly(lat)).is_one());

  // 2t - hbar -> (1-t)^2 / (1-hbar)
  RationalChar v = wedge_star(parse(lat, "2*t - hbar"));
  CHECK(v.num() == parse(lat, "1 - t") * parse(lat, "1 - t"));
  CHECK(v.den() == parse(lat, "1 - hbar"));

  CHECK_THROWS_AS(wedge_star(parse(lat, "1 + t")), std::domain_error);
  CHECK(wedge_star_omitting_trivial(parse(lat, "1 + t")).num() == parse(lat, "1 - t"));
}

TEST_CASE("wedge_star is a homomorphism from sums to products") {
  CharLattice lat = th_lattice();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    LaurentPoly v = random_poly(rng, lat, true, true);
    LaurentPoly w = random_poly(rng, lat, true, true);
    RationalChar lhs = wedge_star(v + w);
    RationalChar rhs = wedge_star(v) * wedge_star(w);
    CHECK(lhs.equals(rhs));
  }
}

TEST_CASE("degree polytopes of supports") {
  CharLattice lat = th_lattice();
  std::vector<int> t_axis{0};

  DegreePolytope d1 = deg_on_axes(parse(lat, "1 + t + hbar*t"), t_axis);
  CHECK(d1.contains_point({Rational(0)}));
  CHECK(d1.contains_point({Rational(1)}));
  CHECK(d1.contains_point({rat(1, 2)}));
  CHECK(!d1.contains_point({Rational(2)}));

  DegreePolytope d2 = deg_on_axes(parse(lat, "t + t^-1"), t_axis);
  CHECK(d2.contains_point({Rational(-1)}));
  CHECK(d2.contains_point({Rational(1)}));
  CHECK(!d2.contains_point({rat(3, 2)}));

  // (1 - t)(1 - hbar t^{-1}) expanded projects to [-1, 1].
  DegreePolytope d3 =
      deg_on_axes(parse(lat, "1 - t") * parse(lat, "1 - hbar*t^-1"), t_axis);
  CHECK(d3.equals(d2));

  CHECK_THROWS_AS(deg_on_axes(LaurentPoly(lat), t_axis), std::domain_error);
}

TEST_CASE("deg of a product is the Minkowski sum") {
  CharLattice lat = th_lattice();
  std::vector<int> axes{0, 1};
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly f = random_poly(rng, lat, false, false);
    LaurentPoly g = random_poly(rng, lat, false, false);
    if (f.is_zero() || g.is_zero()) continue;
    DegreePolytope sum = deg_on_axes(f, axes).minkowski_sum(deg_on_axes(g, axes));
    DegreePolytope prod = deg_on_axes(f * g, axes);
    CHECK(sum.equals(prod));
  }
}

TEST_CASE("boundedness classification") {
  CharLattice lat = th_lattice();
  std::vector<int> t_axis{0};
  LaurentPoly one = LaurentPoly::one(lat);
  LaurentPoly one_plus_t = parse(lat, "1 + t");
  CHECK(is_bounded(one, one_plus_t, t_axis) == Boundedness::strictly_bounded);
  CHECK(is_bounded(one_plus_t, one_plus_t, t_axis) == Boundedness::bounded);
  CHECK(is_bounded(parse(lat, "t^2"), one_plus_t, t_axis) == Boundedness::unbounded);
  CHECK(is_bounded(LaurentPoly(lat), one_plus_t, t_axis) == Boundedness::bounded);
}

TEST_CASE("limits along cocharacters") {
  CharLattice lat = th_lattice();
  IntVec to_inf = IntVec::Zero(2);
  to_inf(0) = 1;

  RationalChar q1(parse(lat, "1 - t*hbar"), parse(lat, "1 - t"));
  RationalChar l1 = limit_along(q1, to_inf);
  CHECK(l1.equals(RationalChar(parse(lat, "hbar"))));

  RationalChar q2(parse(lat, "1 - t^-1"), parse(lat, "1 - t"));
  CHECK(limit_along(q2, to_inf).is_zero());

  RationalChar q3(parse(lat, "1 - hbar"), parse(lat, "1 - hbar"));
  CHECK(limit_along(q3, to_inf).is_one());

  RationalChar q4(parse(lat, "1 - t^2"), parse(lat, "1 - t"));
  CHECK_THROWS_AS(limit_along(q4, to_inf), std::domain_error);
}

TEST_CASE("strict interior bound forces vanishing limits") {
  CharLattice lat = th_lattice();
  std::vector<int> axes{0, 1};
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<Int> expo(-2, 2);
  std::uniform_int_distribution<Int> pick(-1, 1);
  int tested = 0;
  while (tested < 200) {
    // G spans a box, F sits strictly inside it.
    Int r = expo(rng) == 0 ? 2 : 3;
    LaurentPoly G(lat);
    for (Int st = -r; st <= r; st += 2 * r)
      for (Int sh = -r; sh <= r; sh += 2 * r) {
        ExpVec e = lat.zero();
        e[0] = st * lat.scale();
        e[1] = sh * lat.scale();
        G.add_term(e, rat(1 + std::abs(st) + std::abs(sh)));
      }
    LaurentPoly F(lat);
    for (int i = 0; i < 3; ++i) {
      ExpVec e = lat.zero();
      e[0] = pick(rng) * lat.scale();
      e[1] = pick(rng) * lat.scale();
      F.add_term(e, rat(pick(rng) == 0 ? 1 : pick(rng)));
    }
    if (F.is_zero()) continue;
    REQUIRE(is_interior_bounded(F, G, axes));
    CHECK(is_bounded(F, G, axes) == Boundedness::strictly_bounded);
    for (auto [s0, s1] : {std::pair<Int, Int>{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1},
                          {2, -1}, {-3, 2}}) {
      IntVec sigma = IntVec::Zero(2);
      sigma(0) = s0;
      sigma(1) = s1;
      CHECK(limit_along(RationalChar(F, G), sigma).is_zero());
    }
    ++tested;
  }
}

TEST_CASE("limit_along is multiplicative where defined") {
  CharLattice lat = th_lattice();
  IntVec sigma = IntVec::Zero(2);
  sigma(0) = 1;
  std::mt19937_64 rng(23);
  int tested = 0;
  while (tested < 100) {
    LaurentPoly fn = random_poly(rng, lat, false, false);
    LaurentPoly fd = random_poly(rng, lat, false, false);
    LaurentPoly gn = random_poly(rng, lat, false, false);
    LaurentPoly gd = random_poly(rng, lat, false, false);
    if (fn.is_zero() || fd.is_zero() || gn.is_zero() || gd.is_zero()) continue;
    RationalChar P(fn, fd), Q(gn, gd);
    RationalChar lp, lq, lpq;
    try {
      lp = limit_along(P, sigma);
      lq = limit_along(Q, sigma);
      lpq = limit_along(P * Q, sigma);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(lpq.equals(lp * lq));
    ++tested;
  }
}
