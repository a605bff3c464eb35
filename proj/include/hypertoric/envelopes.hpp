#pragma once

#include <optional>

#include "hypertoric/calibration.hpp"
#include "hypertoric/xi.hpp"

namespace hypertoric {

// Fractional equivariant line bundle sum s_e u_e, entering the degree axiom
// and the q -> 0 construction.
struct Slope {
  std::vector<Rational> coeff;  // per index e

  Slope negated() const {
    Slope s;
    for (const auto& c : coeff) s.coeff.push_back(-c);
    return s;
  }
  Int denominator_lcm() const;
};

// Restriction matrix of one envelope family: column p holds Stab(p)|_q. The
// entries are ratios whose denominator is the column's diagonal theta
// leading coefficient.
struct StabMatrix {
  HypertoricData data;  // zeta slot = the chamber the family belongs to
  PolarizationSpec polarization;
  bool opposite = false;  // family for T_X - T^{1/2} instead of T^{1/2}
  Slope slope;
  std::vector<std::vector<RationalChar>> entry;  // [p (source)][q]

  const RationalChar& at(int source, int q) const {
    return entry.at(static_cast<size_t>(source)).at(static_cast<size_t>(q));
  }
};

struct SlopeError {
  int p, q, e;
};

// Signed weight list of a (virtual) polarization restriction.
struct SignedWeight {
  ExpVec w;
  int sign;  // +1 or -1
};
std::vector<SignedWeight> signed_weights(const LaurentPoly& cls);

// T^{1/2}_opp = T_X - T^{1/2} restricted at p, as a signed class.
LaurentPoly opposite_polarization_restriction(const RestrictionContext& ctx, int point_index,
                                              const PolarizationSpec& L);

// Diagonal normalization of condition 2: the attracting-cell class twisted
// by the half determinant, calibrated so that setting hbar to 1 gives
// wedge(T^{1/2}|_p) exactly.
LaurentPoly diagonal_value(const RestrictionContext& ctx, int point_index,
                           const IntVec& chamber, const PolarizationSpec& pol,
                           bool opposite);

// Slope restriction at a point: the A x hbar monomial exponent of
// prod_e (u_e|_p)^{s_e}, on the context lattice (fractional exponents live
// on the scaled lattice).
ExpVec slope_restriction(const RestrictionContext& ctx, int point_index, const Slope& s);

// q -> 0 leading-term construction through the theta-function matrix with
// Kahler variables set to q^{slope}. The chamber is data.zeta; callers build
// opposite families by negating the zeta slot. Throws SlopeError via
// std::domain_error text when the slope is non-generic.
StabMatrix build_stab(const HypertoricData& data, const PolarizationSpec& pol,
                      const Slope& slope, bool opposite_polarization = false,
                      Int scale_hint = 2);

struct AxiomReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Executable form of the three defining conditions.
AxiomReport check_axioms(const StabMatrix& S);

// Localized Euler pairing over the fixed points of one space:
// sum_x a_x b_x / wedge(T_x).
RationalChar euler_pairing_space(const RestrictionContext& ctx,
                                 const std::vector<RationalChar>& a,
                                 const std::vector<RationalChar>& b);

// Pairing matrix of two envelope families; the duality proposition says it
// is the identity when the second family carries the opposite data.
struct PairingReport {
  std::vector<std::vector<RationalChar>> value;
  bool is_identity = false;
};
PairingReport duality_pairing(const StabMatrix& S, const StabMatrix& S_op);

}  // namespace hypertoric
