#pragma once

#include "hypertoric/arrangement.hpp"
#include "hypertoric/laurent.hpp"

namespace hypertoric {

// Which Darboux coordinate is nonzero at the chosen lift of a fixed point.
// The marking is calibrated so that restricting chi_e for e outside the base
// returns hbar exactly when <beta_p_e, eta> > 0.
struct LiftedPoint {
  std::vector<bool> y_nonzero;  // indexed by e; meaningful for e outside the base
};

// Restriction data at one fixed point: the A-part and hbar-exponent of every
// coordinate character, obtained from the stabilizer of the lift by an exact
// integer solve.
struct RestrictionTable {
  LiftedPoint lift;
  std::vector<Int> eps;          // hbar-exponent of chi_e at p, all e
  std::vector<IntVec> a_part;    // A-weight of chi_e at p (zero off the base)
};

RestrictionTable restriction_table(const HypertoricData& data, const FixedPoint& p);

// A character of D x C^x_hbar: integer exponents on the coordinate
// characters plus an hbar exponent.
struct TorusCharacter {
  IntVec d_exponents;  // length n
  Int hbar = 0;
};

// Single-space restriction lattice: one axis per A-coordinate plus hbar.
struct RestrictionContext {
  HypertoricData data;
  std::vector<FixedPoint> points;
  std::vector<RestrictionTable> tables;
  CharLattice lat;
  int hbar_axis;

  const FixedPoint& point(int i) const { return points.at(static_cast<size_t>(i)); }
  int point_count() const { return static_cast<int>(points.size()); }
};

RestrictionContext make_restriction_context(const HypertoricData& data,
                                            const std::string& axis_prefix = "t",
                                            Int scale = 2);

// lambda restricted at p as a monomial exponent on ctx.lat (coefficient 1).
ExpVec restrict_character(const RestrictionContext& ctx, int point_index,
                          const TorusCharacter& lambda);

// Restriction of the coordinate class u_e at p.
ExpVec u_restriction(const RestrictionContext& ctx, int point_index, int e);

Int epsilon(const RestrictionContext& ctx, int point_index, int e);

// Coordinate-lagrangian polarization: per index either the x_e character or
// the y_e character hbar * chi_e^{-1}.
struct PolarizationSpec {
  std::vector<bool> use_y;  // length n; false = x_e
  static PolarizationSpec standard(int n) { return PolarizationSpec{std::vector<bool>(static_cast<size_t>(n), false)}; }
};

LaurentPoly polarization_restriction(const RestrictionContext& ctx, int point_index,
                                     const PolarizationSpec& L);

LaurentPoly tangent_class(const RestrictionContext& ctx, int point_index);

enum class WeightType { attracting, repelling };
WeightType classify_weight(const RestrictionContext& ctx, int point_index, int e,
                           const IntVec& zeta);

// Number of base indices with <alpha_e, zeta> > 0 (rank of the attracting
// half of the standard polarization).
int rank_attracting(const FixedPoint& p, const IntVec& zeta);
int rank_repelling(const FixedPoint& p, const IntVec& zeta);
// Number of non-base indices with <beta_p_e, eta> negative.
int count_offbase_negative(const HypertoricData& data, const FixedPoint& p);

// Joint lattice for classes on X x X^!: the A-axes of X, the A-axes of the
// Gale dual, and one hbar axis shared antidiagonally (dual-side hbar enters
// inverted).
struct JointContext {
  HypertoricData data;
  HypertoricData dual;
  RestrictionContext side_x;   // lattice: t-axes + hbar
  RestrictionContext side_dual;
  CharLattice lat;             // t-axes, z-axes, hbar
  int hbar_axis;
  int t_axis0;
  int z_axis0;

  int points() const { return side_x.point_count(); }
  int dual_points() const { return side_dual.point_count(); }
};

JointContext make_joint_context(const HypertoricData& data, Int scale = 2);

// u_e|_p on the joint lattice (X side keeps its own hbar sign).
ExpVec joint_u(const JointContext& jc, int p_index, int e);
// u-check_e|_{q^!} on the joint lattice, with the dual hbar inverted.
ExpVec joint_u_dual(const JointContext& jc, int q_dual_index, int e);

// Specialization along zeta x eta^{-1}: collapse the torus axes to a single
// t-axis by mu -> <mu, zeta x (-eta)>, keeping hbar.
struct SpecializedLattice {
  CharLattice lat;  // axes: t, hbar
  int t_axis = 0;
  int hbar_axis = 1;
};
SpecializedLattice make_specialized_lattice(Int scale = 2);
LaurentPoly specialize_joint(const JointContext& jc, const SpecializedLattice& sl,
                             const LaurentPoly& f);

}  // namespace hypertoric
