#include <doctest.h>

#include "hypertoric/qseries.hpp"

using namespace hypertoric;

namespace {

CharLattice tlat() { return CharLattice({"t"}, 2); }

}  // namespace

TEST_CASE("series arithmetic truncates at the smaller order") {
  CharLattice lat = tlat();
  QSeries a = QSeries::one(lat, Rational(1));
  a.add(Rational(1), parse_laurent(lat, "t"));
  QSeries b = QSeries::one(lat, Rational(1));
  b.add(Rational(1), parse_laurent(lat, "-t"));
  QSeries prod = a * b;  // the q^2 term falls away
  CHECK(prod.coeff(Rational(0)).is_one());
  CHECK(prod.coeff(Rational(1)).is_zero());

  QSeries c = QSeries::one(lat, Rational(2));
  c.add(Rational(1), parse_laurent(lat, "t"));
  QSeries sq = c * c;
  CHECK(sq.coeff(Rational(1)) == parse_laurent(lat, "2*t"));
  CHECK(sq.coeff(Rational(2)) == parse_laurent(lat, "t^2"));
  CHECK((c * QSeries::one(lat, Rational(2))).equal_through(c, Rational(2)));
}

TEST_CASE("theta expansion through first order") {
  CharLattice lat = tlat();
  QSeries th = theta_expand(lat, lat.unit(0), Rational(1));
  CHECK(th.coeff(Rational(0)) == parse_laurent(lat, "t^(1/2) - t^(-1/2)"));
  // (t^{1/2} - t^{-1/2}) * (-t - t^{-1})
  CHECK(th.coeff(Rational(1)) ==
        parse_laurent(lat, "-t^(3/2) + t^(1/2) - t^(-1/2) + t^(-3/2)"));

  QSeries order0 = theta_expand(lat, lat.unit(0), Rational(0));
  CHECK(order0.coeff(Rational(0)) == parse_laurent(lat, "t^(1/2) - t^(-1/2)"));
}

TEST_CASE("theta is odd in its argument") {
  CharLattice lat = tlat();
  for (int order = 0; order <= 3; ++order) {
    QSeries plus = theta_expand(lat, lat.unit(0), rat(order));
    QSeries minus = theta_expand(lat, negate(lat.unit(0)), rat(order));
    CHECK(plus.scaled(Rational(-1)).equal_through(minus, rat(order)));
  }
}

TEST_CASE("theta products agree with an independent term-by-term expansion") {
  CharLattice lat = CharLattice({"t", "s"}, 2);
  Rational order(3);
  QSeries lhs = theta_expand(lat, lat.unit(0), order) * theta_expand(lat, lat.unit(1), order);

  // Oracle: expand the product of the defining factors directly, without
  // going through theta_expand.
  QSeries oracle = QSeries::one(lat, order);
  for (int axis : {0, 1}) {
    ExpVec x = lat.unit(axis);
    ExpVec half = lat.unit(axis, 1, 2);
    QSeries pre(lat, order, 2);
    pre.add(Rational(0), LaurentPoly::monomial(lat, half));
    pre.add(Rational(0), LaurentPoly::monomial(lat, negate(half), Rational(-1)));
    oracle *= pre;
    for (Int n = 1; rat(n) <= order; ++n) {
      QSeries f1 = QSeries::one(lat, order);
      f1.add(rat(n), LaurentPoly::monomial(lat, x, Rational(-1)));
      QSeries f2 = QSeries::one(lat, order);
      f2.add(rat(n), LaurentPoly::monomial(lat, negate(x), Rational(-1)));
      oracle *= f1 * f2;
    }
  }
  CHECK(lhs.equal_through(oracle, order));
}

TEST_CASE("automorphy smoke test through order 4") {
  // theta(qx) = -q^{-1/2} x^{-1} theta(x)
  CharLattice lat = tlat();
  Rational order(4);
  QSeries shifted = theta_expand_shifted(lat, lat.unit(0), Rational(1), order);
  QSeries base = theta_expand(lat, lat.unit(0), order + 1);
  QSeries rhs = base.shifted(rat(-1, 2), LaurentPoly::monomial(lat, negate(lat.unit(0)), Rational(-1)));
  CHECK(shifted.equal_through(rhs.truncated(order), order - 1));
}
