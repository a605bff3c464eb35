#include "hypertoric/algebra.hpp"

#include <stdexcept>

namespace hypertoric {

namespace {

RationalChar wedge_star_impl(const LaurentPoly& v, bool omit_trivial) {
  const CharLattice& lat = v.lattice();
  LaurentPoly num = LaurentPoly::one(lat);
  LaurentPoly den = LaurentPoly::one(lat);
  for (const auto& [e, c] : v.terms()) {
    if (!is_integer(c))
      throw std::domain_error("wedge_star needs integer coefficients");
    if (is_zero(e)) {
      if (omit_trivial) continue;
      throw std::domain_error(
          "wedge_star: nonzero coefficient on the trivial character");
    }
    LaurentPoly factor = LaurentPoly::one(lat);
    factor.add_term(e, Rational(-1));  // 1 - t^mu
    long mult = c.get_num().get_si();
    for (long i = 0; i < (mult > 0 ? mult : -mult); ++i) {
      if (mult > 0)
        num *= factor;
      else
        den *= factor;
    }
  }
  return RationalChar(num, den);
}

}  // namespace

RationalChar wedge_star(const LaurentPoly& v) { return wedge_star_impl(v, false); }

RationalChar wedge_star_omitting_trivial(const LaurentPoly& v) {
  return wedge_star_impl(v, true);
}

DegreePolytope deg_on_axes(const LaurentPoly& f, const std::vector<int>& axes) {
  if (f.is_zero()) throw std::domain_error("degree of zero undefined");
  DegreePolytope P(static_cast<int>(axes.size()));
  for (const auto& [e, c] : f.terms()) {
    RatPoint p;
    p.reserve(axes.size());
    for (int a : axes) p.push_back(f.lattice().exponent_of(e, a));
    P.add_point(p);
  }
  return P;
}

Boundedness is_bounded(const LaurentPoly& F, const LaurentPoly& G,
                       const std::vector<int>& axes) {
  if (G.is_zero()) throw std::domain_error("bound against zero undefined");
  if (F.is_zero()) return Boundedness::bounded;
  DegreePolytope pf = deg_on_axes(F, axes);
  DegreePolytope pg = deg_on_axes(G, axes);
  if (!pg.contains(pf)) return Boundedness::unbounded;
  if (!pf.contains(pg)) return Boundedness::strictly_bounded;
  return Boundedness::bounded;
}

bool is_interior_bounded(const LaurentPoly& F, const LaurentPoly& G,
                         const std::vector<int>& axes) {
  if (G.is_zero()) throw std::domain_error("bound against zero undefined");
  if (F.is_zero()) return true;
  DegreePolytope pf = deg_on_axes(F, axes);
  DegreePolytope pg = deg_on_axes(G, axes);
  return pg.contains_interior(pf);
}

Rational grade_of(const CharLattice& lat, const ExpVec& e, const IntVec& sigma) {
  if (sigma.size() != lat.rank()) throw std::invalid_argument("cocharacter rank mismatch");
  Rational g(0);
  for (int i = 0; i < lat.rank(); ++i)
    if (sigma(i) != 0) g += rat(sigma(i)) * lat.exponent_of(e, i);
  return g;
}

LeadingPart leading_along(const LaurentPoly& f, const IntVec& sigma) {
  if (f.is_zero()) throw std::domain_error("leading part of zero undefined");
  const CharLattice& lat = f.lattice();
  bool first = true;
  Rational best(0);
  for (const auto& [e, c] : f.terms()) {
    Rational g = grade_of(lat, e, sigma);
    if (first || g > best) {
      best = g;
      first = false;
    }
  }
  LaurentPoly lead(lat);
  for (const auto& [e, c] : f.terms())
    if (grade_of(lat, e, sigma) == best) lead.add_term(e, c);
  return {best, lead};
}

RationalChar limit_along(const RationalChar& Q, const IntVec& sigma) {
  if (sigma.isZero()) throw std::invalid_argument("cocharacter must be nonzero");
  const CharLattice& lat = Q.lattice();
  if (Q.is_zero()) return RationalChar::zero(lat);
  LeadingPart dn = leading_along(Q.den(), sigma);
  LeadingPart nm = leading_along(Q.num(), sigma);
  if (nm.grade > dn.grade) throw std::domain_error("limit diverges along sigma");
  if (nm.grade < dn.grade) return RationalChar::zero(lat);
  return RationalChar(nm.part, dn.part);
}

}  // namespace hypertoric
