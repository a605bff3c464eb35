#pragma once

#include <vector>

#include "hypertoric/polytope.hpp"
#include "hypertoric/rational_char.hpp"

namespace hypertoric {

// K-theoretic exterior algebra map: an integer-coefficient class
// sum c_mu t^mu goes to prod_{mu != 0} (1 - t^mu)^{c_mu}. A nonzero
// coefficient on the trivial character is rejected here; the omission
// convention for trivial factors belongs to the localization layer.
RationalChar wedge_star(const LaurentPoly& v);

// Same product but silently skipping the trivial character, as localization
// denominators require.
RationalChar wedge_star_omitting_trivial(const LaurentPoly& v);

// Support projected to the chosen axes, as a rational polytope.
DegreePolytope deg_on_axes(const LaurentPoly& f, const std::vector<int>& axes);

enum class Boundedness { unbounded, bounded, strictly_bounded };

// Hull comparison of projected supports. F == 0 counts as bounded by
// convention. "Strict" means proper containment of hulls.
Boundedness is_bounded(const LaurentPoly& F, const LaurentPoly& G,
                       const std::vector<int>& axes);

// True when every support point of F projects into the topological interior
// of deg(G); this is the hypothesis under which limits vanish along every
// cocharacter.
bool is_interior_bounded(const LaurentPoly& F, const LaurentPoly& G,
                         const std::vector<int>& axes);

// sigma-grading of an exponent vector: <mu, sigma> in unscaled units.
Rational grade_of(const CharLattice& lat, const ExpVec& e, const IntVec& sigma);

// Leading part of f along sigma (the terms of maximal grade), plus the grade.
struct LeadingPart {
  Rational grade;
  LaurentPoly part;
};
LeadingPart leading_along(const LaurentPoly& f, const IntVec& sigma);

// Limit of Q along sigma -> infinity: zero if the numerator grade is smaller
// than the denominator grade, the ratio of leading parts if equal, and an
// error if larger (the valuation condition fails).
RationalChar limit_along(const RationalChar& Q, const IntVec& sigma);

}  // namespace hypertoric
