#include "hypertoric/restriction.hpp"

#include <stdexcept>

namespace hypertoric {

RestrictionTable restriction_table(const HypertoricData& data, const FixedPoint& p) {
  const int n = data.n();
  RestrictionTable t;
  t.lift.y_nonzero.assign(static_cast<size_t>(n), false);
  t.eps.assign(static_cast<size_t>(n), 0);
  t.a_part.assign(static_cast<size_t>(n), IntVec::Zero(data.a_rank()));

  for (int e = 0; e < n; ++e) {
    if (p.contains(e)) continue;
    Int pairing = p.beta_p.at(e).dot(data.eta);
    if (pairing == 0) throw std::domain_error("eta pairs to zero with a beta_p vector");
    t.lift.y_nonzero[static_cast<size_t>(e)] = pairing > 0;
    t.eps[static_cast<size_t>(e)] = pairing > 0 ? 1 : 0;
  }
  for (int e : p.base) {
    const IntVec& a = p.alpha.at(e);
    t.a_part[static_cast<size_t>(e)] = a;
    // Stabilizer solve: the hbar-component of the lifted cocharacter moves
    // the y-marked coordinates, which the base coordinates must compensate.
    Int eps = 0;
    for (int f = 0; f < n; ++f) {
      if (p.contains(f)) continue;
      if (!t.lift.y_nonzero[static_cast<size_t>(f)]) continue;
      eps -= a.dot(data.beta_column(f));
    }
    t.eps[static_cast<size_t>(e)] = eps;
  }
  return t;
}

RestrictionContext make_restriction_context(const HypertoricData& data,
                                            const std::string& axis_prefix, Int scale) {
  RestrictionContext ctx;
  ctx.data = data;
  ctx.points = enumerate_bases(data);
  for (const auto& p : ctx.points) ctx.tables.push_back(restriction_table(data, p));
  std::vector<std::string> labels;
  if (data.a_rank() == 1) {
    labels.push_back(axis_prefix);
  } else {
    for (int i = 0; i < data.a_rank(); ++i)
      labels.push_back(axis_prefix + std::to_string(i + 1));
  }
  labels.push_back("hbar");
  ctx.lat = CharLattice(labels, scale);
  ctx.hbar_axis = data.a_rank();
  return ctx;
}

ExpVec restrict_character(const RestrictionContext& ctx, int point_index,
                          const TorusCharacter& lambda) {
  const HypertoricData& data = ctx.data;
  if (lambda.d_exponents.size() != data.n())
    throw std::invalid_argument("character length mismatch");
  const RestrictionTable& t = ctx.tables.at(static_cast<size_t>(point_index));
  IntVec a = IntVec::Zero(data.a_rank());
  Int h = lambda.hbar;
  for (int e = 0; e < data.n(); ++e) {
    Int m = lambda.d_exponents(e);
    if (m == 0) continue;
    a += m * t.a_part[static_cast<size_t>(e)];
    h += m * t.eps[static_cast<size_t>(e)];
  }
  ExpVec out = ctx.lat.zero();
  for (int i = 0; i < data.a_rank(); ++i) out[static_cast<size_t>(i)] = a(i) * ctx.lat.scale();
  out[static_cast<size_t>(ctx.hbar_axis)] = h * ctx.lat.scale();
  return out;
}

ExpVec u_restriction(const RestrictionContext& ctx, int point_index, int e) {
  TorusCharacter chi;
  chi.d_exponents = IntVec::Zero(ctx.data.n());
  chi.d_exponents(e) = 1;
  return restrict_character(ctx, point_index, chi);
}

Int epsilon(const RestrictionContext& ctx, int point_index, int e) {
  return ctx.tables.at(static_cast<size_t>(point_index)).eps[static_cast<size_t>(e)];
}

LaurentPoly polarization_restriction(const RestrictionContext& ctx, int point_index,
                                     const PolarizationSpec& L) {
  LaurentPoly sum(ctx.lat);
  for (int e = 0; e < ctx.data.n(); ++e) {
    TorusCharacter chi;
    chi.d_exponents = IntVec::Zero(ctx.data.n());
    if (L.use_y[static_cast<size_t>(e)]) {
      chi.d_exponents(e) = -1;
      chi.hbar = 1;
    } else {
      chi.d_exponents(e) = 1;
    }
    sum.add_term(restrict_character(ctx, point_index, chi), Rational(1));
  }
  return sum;
}

LaurentPoly tangent_class(const RestrictionContext& ctx, int point_index) {
  const FixedPoint& p = ctx.point(point_index);
  LaurentPoly sum(ctx.lat);
  ExpVec hbar = ctx.lat.unit(ctx.hbar_axis);
  for (int e : p.base) {
    ExpVec w = u_restriction(ctx, point_index, e);
    sum.add_term(w, Rational(1));
    sum.add_term(hbar - w, Rational(1));
  }
  return sum;
}

WeightType classify_weight(const RestrictionContext& ctx, int point_index, int e,
                           const IntVec& zeta) {
  const FixedPoint& p = ctx.point(point_index);
  Int pairing = p.alpha.at(e).dot(zeta);
  if (pairing == 0) throw std::domain_error("zeta genericity violated at a base index");
  return pairing > 0 ? WeightType::attracting : WeightType::repelling;
}

int rank_attracting(const FixedPoint& p, const IntVec& zeta) {
  int r = 0;
  for (const auto& [e, a] : p.alpha)
    if (a.dot(zeta) > 0) ++r;
  return r;
}

int rank_repelling(const FixedPoint& p, const IntVec& zeta) {
  int r = 0;
  for (const auto& [e, a] : p.alpha)
    if (a.dot(zeta) < 0) ++r;
  return r;
}

int count_offbase_negative(const HypertoricData& data, const FixedPoint& p) {
  int r = 0;
  for (const auto& [e, b] : p.beta_p)
    if (b.dot(data.eta) < 0) ++r;
  return r;
}

JointContext make_joint_context(const HypertoricData& data, Int scale) {
  JointContext jc;
  jc.data = data;
  jc.dual = gale_dual(data);
  jc.side_x = make_restriction_context(data, "t", scale);
  jc.side_dual = make_restriction_context(jc.dual, "z", scale);
  std::vector<std::string> labels;
  for (int i = 0; i < data.a_rank(); ++i) labels.push_back(jc.side_x.lat.label(i));
  for (int i = 0; i < data.k(); ++i) labels.push_back(jc.side_dual.lat.label(i));
  labels.push_back("hbar");
  jc.lat = CharLattice(labels, scale);
  jc.t_axis0 = 0;
  jc.z_axis0 = data.a_rank();
  jc.hbar_axis = data.n();
  return jc;
}

ExpVec joint_u(const JointContext& jc, int p_index, int e) {
  ExpVec own = u_restriction(jc.side_x, p_index, e);
  ExpVec out = jc.lat.zero();
  for (int i = 0; i < jc.data.a_rank(); ++i)
    out[static_cast<size_t>(jc.t_axis0 + i)] = own[static_cast<size_t>(i)];
  out[static_cast<size_t>(jc.hbar_axis)] = own[static_cast<size_t>(jc.side_x.hbar_axis)];
  return out;
}

ExpVec joint_u_dual(const JointContext& jc, int q_dual_index, int e) {
  ExpVec own = u_restriction(jc.side_dual, q_dual_index, e);
  ExpVec out = jc.lat.zero();
  for (int i = 0; i < jc.dual.a_rank(); ++i)
    out[static_cast<size_t>(jc.z_axis0 + i)] = own[static_cast<size_t>(i)];
  // Antidiagonal embedding: the dual-side hbar appears inverted.
  out[static_cast<size_t>(jc.hbar_axis)] = -own[static_cast<size_t>(jc.side_dual.hbar_axis)];
  return out;
}

SpecializedLattice make_specialized_lattice(Int scale) {
  SpecializedLattice sl;
  sl.lat = CharLattice({"t", "hbar"}, scale);
  return sl;
}

LaurentPoly specialize_joint(const JointContext& jc, const SpecializedLattice& sl,
                             const LaurentPoly& f) {
  if (f.lattice() != jc.lat) throw std::invalid_argument("not a joint-lattice class");
  std::vector<ExpVec> images(static_cast<size_t>(jc.lat.rank()));
  for (int i = 0; i < jc.data.a_rank(); ++i)
    images[static_cast<size_t>(jc.t_axis0 + i)] = sl.lat.unit(sl.t_axis, jc.data.zeta(i));
  for (int i = 0; i < jc.data.k(); ++i)
    images[static_cast<size_t>(jc.z_axis0 + i)] = sl.lat.unit(sl.t_axis, -jc.data.eta(i));
  images[static_cast<size_t>(jc.hbar_axis)] = sl.lat.unit(sl.hbar_axis);
  return f.substituted(sl.lat, images);
}

}  // namespace hypertoric
