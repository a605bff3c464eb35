#include "hypertoric/localization.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hypertoric {

namespace {

LaurentPoly one_minus(const CharLattice& lat, const ExpVec& e) {
  LaurentPoly f = LaurentPoly::one(lat);
  f.add_term(e, Rational(-1));
  return f;
}

RationalChar hbar_ratio(const SpecializedLattice& sl, Int power) {
  // (hbar^{power} / (1 - hbar^{power})) as a ratio on (t, hbar).
  ExpVec h = sl.lat.unit(sl.hbar_axis, power);
  return RationalChar(LaurentPoly::monomial(sl.lat, h), one_minus(sl.lat, h));
}

}  // namespace

std::vector<PneqqFactor> pneqq_factors(const JointContext& jc, const SpecializedLattice& sl,
                                       int p_index, int q_index) {
  const HypertoricData& data = jc.data;
  const FixedPoint& p = jc.side_x.point(p_index);
  const FixedPoint& q = jc.side_x.point(q_index);
  int qd = dual_index(jc.side_x.points, jc.side_dual.points, q_index);
  const FixedPoint& q_dual = jc.side_dual.point(qd);
  const CharLattice& lat = sl.lat;

  std::vector<PneqqFactor> out;
  for (int e = 0; e < data.n(); ++e) {
    bool in_p = p.contains(e);
    bool in_q = q.contains(e);
    FactorType type = in_p ? (in_q ? FactorType::second : FactorType::first)
                           : (in_q ? FactorType::last : FactorType::third);

    // The displayed numerator and denominator are built from the epsilon
    // dictionary forced by the restriction lemma: the solve values shift by
    // one on each side (X side down, dual side up), and the dual torus axis
    // enters through its inverse, so its t-grade is <alpha, +eta>.
    ExpVec U = lat.zero();
    if (in_p) {
      Int c = p.alpha.at(e).dot(data.zeta);
      U[static_cast<size_t>(sl.t_axis)] = c * lat.scale();
    }
    U[static_cast<size_t>(sl.hbar_axis)] =
        (epsilon(jc.side_x, p_index, e) - 1) * lat.scale();

    ExpVec V = lat.zero();
    if (!in_q) {
      Int c = q_dual.alpha.at(e).dot(data.eta);
      V[static_cast<size_t>(sl.t_axis)] = c * lat.scale();
    }
    V[static_cast<size_t>(sl.hbar_axis)] =
        (1 - epsilon(jc.side_dual, qd, e)) * lat.scale();

    LaurentPoly num = one_minus(lat, U + V);
    LaurentPoly den = LaurentPoly::one(lat);
    if (!is_zero(U)) den *= one_minus(lat, U);
    if (!is_zero(V)) den *= one_minus(lat, V);

    // Case table of the proof, extended by the sign analysis.
    RationalChar table = RationalChar::one(lat);
    Rational cu = lat.exponent_of(U, sl.t_axis);
    Rational cv = lat.exponent_of(V, sl.t_axis);
    switch (type) {
      case FactorType::first: {
        if (sgn(cu) * sgn(cv) < 0)
          table = RationalChar::zero(lat);
        else if (sgn(cu) > 0)
          table = RationalChar(LaurentPoly::constant(lat, Rational(-1)));
        break;
      }
      case FactorType::second: {
        bool dual_flag = lat.exponent_of(V, sl.hbar_axis) == 1;
        if (dual_flag)
          table = sgn(cu) > 0
                      ? hbar_ratio(sl, 1)
                      : RationalChar(LaurentPoly::one(lat),
                                     one_minus(lat, lat.unit(sl.hbar_axis, 1)));
        break;
      }
      case FactorType::third: {
        bool x_flag = lat.exponent_of(U, sl.hbar_axis) == -1;
        if (x_flag)
          table = sgn(cv) > 0
                      ? hbar_ratio(sl, -1)
                      : RationalChar(LaurentPoly::one(lat),
                                     one_minus(lat, lat.unit(sl.hbar_axis, -1)));
        break;
      }
      case FactorType::last: {
        table = RationalChar(num, den);  // constant in t: equal to its limit
        break;
      }
    }
    out.push_back({e, type, RationalChar(num, den), table});
  }
  return out;
}

RationalChar pneqq_closed_form(const JointContext& jc, const SpecializedLattice& sl,
                               int p_index) {
  const FixedPoint& p = jc.side_x.point(p_index);
  int rk_ind = rank_attracting(p, jc.data.zeta);
  int rk_ind_dual = count_offbase_negative(jc.data, p);
  RationalChar v = RationalChar::one(sl.lat);
  for (int i = 0; i < rk_ind; ++i) v = v * hbar_ratio(sl, 1);
  for (int i = 0; i < rk_ind_dual; ++i) v = v * hbar_ratio(sl, -1);
  return v;
}

PneqqResult pneqq_limit(const JointContext& jc, const SpecializedLattice& sl, int p_index,
                        int q_index) {
  std::vector<PneqqFactor> factors = pneqq_factors(jc, sl, p_index, q_index);
  RationalChar product = RationalChar::one(sl.lat);
  RationalChar table = RationalChar::one(sl.lat);
  for (const auto& f : factors) {
    product = product * f.value;
    table = table * f.table_limit;
  }
  IntVec sigma = IntVec::Zero(sl.lat.rank());
  sigma(sl.t_axis) = 1;
  PneqqResult r;
  r.product_limit = product.is_zero() ? RationalChar::zero(sl.lat) : limit_along(product, sigma);
  r.table_product = table;
  r.expected = (p_index == q_index) ? pneqq_closed_form(jc, sl, p_index)
                                    : RationalChar::zero(sl.lat);
  r.pass = r.product_limit.equals(r.table_product) && r.product_limit.equals(r.expected);
  return r;
}

namespace {

// Specialization of a single-space restriction lattice (t-axes + hbar) to
// (t, hbar): torus exponents collapse along the given cocharacter; the dual
// side negates hbar (antidiagonal embedding).
LaurentPoly specialize_side(const LaurentPoly& f, const SpecializedLattice& sl,
                            const IntVec& cochar, bool negate_hbar) {
  const CharLattice& src = f.lattice();
  int a_rank = src.rank() - 1;
  if (src.scale() != sl.lat.scale()) throw std::logic_error("scale mismatch in specialization");
  LaurentPoly out(sl.lat);
  for (const auto& [e, c] : f.terms()) {
    ExpVec g = sl.lat.zero();
    Int t = 0;
    for (int i = 0; i < a_rank; ++i) t += cochar(i) * e[static_cast<size_t>(i)];
    g[static_cast<size_t>(sl.t_axis)] = t;
    Int h = e[static_cast<size_t>(a_rank)];
    g[static_cast<size_t>(sl.hbar_axis)] = negate_hbar ? -h : h;
    out.add_term(g, c);
  }
  return out;
}

ExpVec specialize_exp(const ExpVec& e, int a_rank, const SpecializedLattice& sl,
                      const IntVec& cochar, bool negate_hbar) {
  ExpVec g = sl.lat.zero();
  Int t = 0;
  for (int i = 0; i < a_rank; ++i) t += cochar(i) * e[static_cast<size_t>(i)];
  g[static_cast<size_t>(sl.t_axis)] = t;
  Int h = e[static_cast<size_t>(a_rank)];
  g[static_cast<size_t>(sl.hbar_axis)] = negate_hbar ? -h : h;
  return g;
}

LaurentPoly wedge_denominator(const RestrictionContext& ctx, int x,
                              const SpecializedLattice& sl, const IntVec& cochar,
                              bool negate_hbar) {
  LaurentPoly den = LaurentPoly::one(sl.lat);
  for (const auto& sw : signed_weights(tangent_class(ctx, x))) {
    ExpVec w = specialize_exp(sw.w, ctx.data.a_rank(), sl, cochar, negate_hbar);
    if (kLocalizationDenominator == DenomConvention::wedge_tangent_dual) w = negate(w);
    if (is_zero(w)) continue;
    den *= one_minus(sl.lat, w);
  }
  return den;
}

}  // namespace

IntertwinerReport intertwiner_check(const HypertoricData& data, const Slope& slope_x,
                                    const Slope& slope_dual) {
  Int scale = std::lcm<Int>(2, std::lcm<Int>(slope_x.denominator_lcm(),
                                             slope_dual.denominator_lcm()));
  JointContext jc = make_joint_context(data, scale);
  SpecializedLattice sl = make_specialized_lattice(scale);
  const int m = jc.points();

  PolarizationSpec pol = PolarizationSpec::standard(data.n());
  StabMatrix S_x = build_stab(data, pol, slope_x, /*opposite=*/true, scale);

  HypertoricData dual = gale_dual(data);
  dual.zeta = data.eta;  // chamber written in the intertwining statement
  StabMatrix S_d = build_stab(dual, pol, slope_dual, /*opposite=*/true, scale);

  // Side restriction contexts at the common scale.
  RestrictionContext ctx_x = jc.side_x;
  RestrictionContext ctx_d = jc.side_dual;

  XiMatrix xi = xi_matrix(jc);

  // Specialized slope monomials per point.
  std::vector<ExpVec> Lx(static_cast<size_t>(m)), Ld(static_cast<size_t>(m));
  for (int x = 0; x < m; ++x) {
    Lx[static_cast<size_t>(x)] = specialize_exp(slope_restriction(ctx_x, x, slope_x),
                                                data.a_rank(), sl, data.zeta, false);
    Ld[static_cast<size_t>(x)] = specialize_exp(slope_restriction(ctx_d, x, slope_dual),
                                                data.k(), sl, -data.eta, true);
  }

  // Wedge denominators and their complementary products.
  std::vector<LaurentPoly> Dx, Dy;
  for (int x = 0; x < m; ++x) Dx.push_back(wedge_denominator(ctx_x, x, sl, data.zeta, false));
  for (int y = 0; y < m; ++y) Dy.push_back(wedge_denominator(ctx_d, y, sl, -data.eta, true));
  auto complements = [&](const std::vector<LaurentPoly>& D) {
    std::vector<LaurentPoly> P(D.size(), LaurentPoly::one(sl.lat));
    for (size_t i = 0; i < D.size(); ++i)
      for (size_t j = 0; j < D.size(); ++j)
        if (i != j) P[i] *= D[j];
    return P;
  };
  std::vector<LaurentPoly> Px = complements(Dx), Py = complements(Dy);
  LaurentPoly Dall = LaurentPoly::one(sl.lat);
  for (const auto& d : Dx) Dall *= d;
  for (const auto& d : Dy) Dall *= d;

  IntVec sigma = IntVec::Zero(sl.lat.rank());
  sigma(sl.t_axis) = 1;

  IntertwinerReport rep;
  for (int p = 0; p < m; ++p) {
    int pd = dual_index(jc.side_x.points, jc.side_dual.points, p);
    LaurentPoly Cp = specialize_side(S_x.at(p, p).den(), sl, data.zeta, false);
    for (int q = 0; q < m; ++q) {
      int qd = dual_index(jc.side_x.points, jc.side_dual.points, q);
      LaurentPoly Cq = specialize_side(S_d.at(qd, qd).den(), sl, -data.eta, true);

      bool all_bounded = true;
      LaurentPoly num(sl.lat);
      for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
          // xi restricted at x cross y-dual needs the dual INDEX of y.
          int yd = dual_index(jc.side_x.points, jc.side_dual.points, y);
          LaurentPoly xi_s = specialize_joint(jc, sl,
                                              xi.entry[static_cast<size_t>(x)][static_cast<size_t>(y)]);
          if (xi_s.is_zero()) continue;
          LaurentPoly sx = specialize_side(S_x.at(p, x).num(), sl, data.zeta, false);
          LaurentPoly sy = specialize_side(S_d.at(qd, yd).num(), sl, -data.eta, true);
          if (sx.is_zero() || sy.is_zero()) continue;
          // Slope prefactors: L^X_p L^{X!}_{q!} (L^X_x L^{X!}_{y!})^{-1}.
          ExpVec shift = (Lx[static_cast<size_t>(p)] - Lx[static_cast<size_t>(x)]) +
                         (Ld[static_cast<size_t>(qd)] - Ld[static_cast<size_t>(yd)]);
          LaurentPoly term = (xi_s * sx * sy).shifted(shift);
          // Boundedness of the summand along the specialization, before the
          // complementary denominators are folded in.
          LaurentPoly own_den = Dx[static_cast<size_t>(x)] * Dy[static_cast<size_t>(y)] * Cp * Cq;
          Boundedness b = is_bounded(term, own_den, {sl.t_axis});
          if (b == Boundedness::unbounded) all_bounded = false;
          num += term * Px[static_cast<size_t>(x)] * Py[static_cast<size_t>(y)];
        }
      }
      LaurentPoly den = Dall * Cp * Cq;

      RationalChar limit = num.is_zero() ? RationalChar::zero(sl.lat)
                                         : limit_along(RationalChar(num, den), sigma);
      RationalChar expected = RationalChar::zero(sl.lat);
      if (p == q) {
        const FixedPoint& fp = jc.side_x.point(p);
        int rk = rank_attracting(fp, data.zeta);
        int rk_dual = rank_repelling(fp, data.zeta);
        expected = RationalChar::one(sl.lat);
        for (int i = 0; i < rk; ++i) expected = expected * hbar_ratio(sl, 1);
        for (int i = 0; i < rk_dual; ++i) expected = expected * hbar_ratio(sl, -1);
      }
      IntertwinerRow row;
      row.p = p;
      row.q = q;
      row.bounded = all_bounded;
      row.pass = limit.equals(expected);
      row.computed = limit.str();
      row.expected = expected.str();
      rep.rows.push_back(std::move(row));
      (void)pd;
    }
  }
  return rep;
}

}  // namespace hypertoric
