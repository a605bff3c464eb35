#include "hypertoric/envelopes.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hypertoric {

namespace {

IntVec chamber_sigma(const RestrictionContext& ctx, const IntVec& chamber) {
  IntVec sigma = IntVec::Zero(ctx.lat.rank());
  for (int i = 0; i < ctx.data.a_rank(); ++i) sigma(i) = chamber(i);
  return sigma;
}

LaurentPoly koszul_factor(const CharLattice& lat, const ExpVec& w) {
  LaurentPoly f = LaurentPoly::one(lat);
  if (kDiagonalKoszul == KoszulConvention::one_minus_w)
    f.add_term(w, Rational(-1));
  else
    f.add_term(negate(w), Rational(-1));
  return f;
}

}  // namespace

Int Slope::denominator_lcm() const {
  Int l = 1;
  for (const auto& c : coeff) {
    Int d = static_cast<Int>(c.get_den().get_si());
    l = std::lcm(l, d);
  }
  return l;
}

std::vector<SignedWeight> signed_weights(const LaurentPoly& cls) {
  std::vector<SignedWeight> out;
  for (const auto& [e, c] : cls.terms()) {
    if (!is_integer(c)) throw std::domain_error("weights need integer multiplicities");
    long m = c.get_num().get_si();
    for (long i = 0; i < (m > 0 ? m : -m); ++i) out.push_back({e, m > 0 ? 1 : -1});
  }
  return out;
}

LaurentPoly opposite_polarization_restriction(const RestrictionContext& ctx, int point_index,
                                              const PolarizationSpec& L) {
  return tangent_class(ctx, point_index) - polarization_restriction(ctx, point_index, L);
}

LaurentPoly diagonal_value(const RestrictionContext& ctx, int point_index,
                           const IntVec& chamber, const PolarizationSpec& pol,
                           bool opposite) {
  const CharLattice& lat = ctx.lat;
  if (lat.scale() % 2 != 0) throw std::logic_error("diagonal value needs an even lattice scale");
  IntVec sigma = chamber_sigma(ctx, chamber);

  LaurentPoly tangent = tangent_class(ctx, point_index);
  std::vector<ExpVec> repelling;
  for (const auto& sw : signed_weights(tangent)) {
    Rational g = grade_of(lat, sw.w, sigma);
    if (is_zero(g)) throw std::domain_error("chamber pairs to zero with a tangent weight");
    if (sgn(g) < 0) repelling.push_back(sw.w);
  }

  LaurentPoly half = opposite ? opposite_polarization_restriction(ctx, point_index, pol)
                              : polarization_restriction(ctx, point_index, pol);
  std::vector<SignedWeight> half_weights = signed_weights(half);

  int rk_pos = 0;
  ExpVec det_half = lat.zero();
  for (const auto& sw : half_weights) {
    if (sgn(grade_of(lat, sw.w, sigma)) > 0) rk_pos += sw.sign;
    if (sw.sign > 0)
      det_half = det_half + sw.w;
    else
      det_half = det_half - sw.w;
  }
  ExpVec det_rep = lat.zero();
  for (const auto& w : repelling) det_rep = det_rep + w;

  ExpVec diff = kDiagonalDetRatio == DetRatio::polarization_over_repelling
                    ? det_half - det_rep
                    : det_rep - det_half;
  ExpVec half_diff(diff.size());
  for (size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] % 2 != 0) throw std::logic_error("half determinant leaves the lattice");
    half_diff[i] = diff[i] / 2;
  }

  Rational sign = (rk_pos % 2 == 0) ? Rational(1) : Rational(-1);
  LaurentPoly value = LaurentPoly::monomial(lat, half_diff, sign);
  for (const auto& w : repelling) value *= koszul_factor(lat, w);
  return value;
}

ExpVec slope_restriction(const RestrictionContext& ctx, int point_index, const Slope& s) {
  if (static_cast<int>(s.coeff.size()) != ctx.data.n())
    throw std::invalid_argument("slope needs one coefficient per index");
  std::vector<Rational> acc(static_cast<size_t>(ctx.lat.rank()), Rational(0));
  for (int e = 0; e < ctx.data.n(); ++e) {
    if (is_zero(s.coeff[static_cast<size_t>(e)])) continue;
    ExpVec u = u_restriction(ctx, point_index, e);
    for (int i = 0; i < ctx.lat.rank(); ++i)
      acc[static_cast<size_t>(i)] += s.coeff[static_cast<size_t>(e)] * rat(u[static_cast<size_t>(i)]);
  }
  ExpVec out(static_cast<size_t>(ctx.lat.rank()), 0);
  for (size_t i = 0; i < out.size(); ++i) {
    if (!is_integer(acc[i]))
      throw std::domain_error("slope restriction leaves the scaled lattice; raise the scale");
    out[i] = static_cast<Int>(acc[i].get_num().get_si());
  }
  return out;
}

namespace {

// Leading q-term of the theta section at argument q^a * m, for a = 0 or a
// not an integer. Exact valuation plus the coefficient polynomial.
struct ThetaLead {
  Rational valuation;
  LaurentPoly coeff;
};

ThetaLead theta_lead(const CharLattice& lat, const ExpVec& m, const Rational& a) {
  for (Int v : m)
    if (v % 2 != 0) throw std::logic_error("theta argument off the half-integer lattice");
  ExpVec half(m.size());
  for (size_t i = 0; i < m.size(); ++i) half[i] = m[i] / 2;

  if (is_zero(a)) {
    LaurentPoly c(lat);
    c.add_term(half, Rational(1));
    c.add_term(negate(half), Rational(-1));
    return {Rational(0), c};  // zero polynomial when m is trivial
  }
  if (is_integer(a)) throw std::logic_error("integer shift reached theta_lead");
  if (sgn(a) < 0) {
    ThetaLead l = theta_lead(lat, negate(m), -a);
    return {l.valuation, -l.coeff};
  }
  // a > 0: prefactor lead is -q^{-a/2} m^{-1/2}; each factor (1 - q^{n-a}/m)
  // with n < a contributes its own lead -q^{n-a} m^{-1}.
  Int n0 = static_cast<Int>(mpz_class(a.get_num() / a.get_den()).get_si());  // floor, a > 0
  Rational v = -a / 2;
  for (Int n = 1; n <= n0; ++n) v += rat(n) - a;
  ExpVec exp = negate(half);
  for (Int n = 1; n <= n0; ++n) exp = exp - m;
  Rational sign = ((n0 + 1) % 2 == 0) ? Rational(1) : Rational(-1);
  return {v, LaurentPoly::monomial(lat, exp, sign)};
}

}  // namespace

StabMatrix build_stab(const HypertoricData& data, const PolarizationSpec& pol,
                      const Slope& slope, bool opposite_polarization, Int scale_hint) {
  Int scale = std::lcm<Int>(std::lcm<Int>(2, scale_hint), slope.denominator_lcm());
  JointContext jc = make_joint_context(data, scale);
  const int m = jc.points();
  const CharLattice& lat = jc.side_x.lat;

  // Slope pushed to the dual equivariant axes: s_hat = partial^T s.
  std::vector<Rational> s_hat(static_cast<size_t>(data.k()), Rational(0));
  for (int j = 0; j < data.k(); ++j)
    for (int e = 0; e < data.n(); ++e)
      s_hat[static_cast<size_t>(j)] += rat(data.partial(e, j)) * slope.coeff[static_cast<size_t>(e)];

  // Leading term of each matrix entry prod_e theta(u_e|_q ucheck_e|_{p!})
  // after substituting z^mu -> q^{sign * <s_hat, mu>}.
  std::vector<std::vector<std::optional<ThetaLead>>> lead(
      static_cast<size_t>(m), std::vector<std::optional<ThetaLead>>(static_cast<size_t>(m)));
  for (int p = 0; p < m; ++p) {
    int pd = dual_index(jc.side_x.points, jc.side_dual.points, p);
    for (int q = 0; q < m; ++q) {
      Rational v(0);
      LaurentPoly coeff = LaurentPoly::one(lat);
      bool zero = false;
      for (int e = 0; e < data.n() && !zero; ++e) {
        ExpVec arg = joint_u(jc, q, e) + joint_u_dual(jc, pd, e);
        Rational a(0);
        bool has_z = false;
        for (int j = 0; j < data.k(); ++j) {
          Int ze = arg[static_cast<size_t>(jc.z_axis0 + j)];
          if (ze != 0) has_z = true;
          a += s_hat[static_cast<size_t>(j)] * rat(ze, jc.lat.scale());
        }
        a *= rat(kSlopeSubstitutionSign);
        ExpVec me(static_cast<size_t>(lat.rank()), 0);
        for (int i = 0; i < data.a_rank(); ++i) me[static_cast<size_t>(i)] = arg[static_cast<size_t>(i)];
        me[static_cast<size_t>(jc.side_x.hbar_axis)] = arg[static_cast<size_t>(jc.hbar_axis)];
        if (has_z && is_integer(a)) {
          std::ostringstream msg;
          msg << "slope is not generic: integral q-shift at pair (p=" << p << ", q=" << q
              << ", e=" << e << ")";
          throw std::domain_error(msg.str());
        }
        if (!has_z && hypertoric::is_zero(me)) {
          zero = true;  // theta at the trivial character vanishes identically
          continue;
        }
        ThetaLead l = theta_lead(lat, me, a);
        if (l.coeff.is_zero()) {
          zero = true;
          continue;
        }
        v += l.valuation;
        coeff *= l.coeff;
      }
      if (!zero) lead[static_cast<size_t>(q)][static_cast<size_t>(p)] = ThetaLead{v, coeff};
    }
  }

  StabMatrix S;
  S.data = data;
  S.polarization = pol;
  S.slope = slope;
  S.opposite = opposite_polarization;
  S.entry.assign(static_cast<size_t>(m), std::vector<RationalChar>(static_cast<size_t>(m)));
  for (int p = 0; p < m; ++p) {
    const auto& diag = lead[static_cast<size_t>(p)][static_cast<size_t>(p)];
    if (!diag)
      throw std::logic_error("diagonal theta entry vanished; data is degenerate");
    LaurentPoly dvalue =
        diagonal_value(jc.side_x, p, data.zeta, pol, opposite_polarization);
    for (int q = 0; q < m; ++q) {
      const auto& l = lead[static_cast<size_t>(q)][static_cast<size_t>(p)];
      if (!l || l->valuation > diag->valuation) {
        S.entry[static_cast<size_t>(p)][static_cast<size_t>(q)] = RationalChar::zero(lat);
        continue;
      }
      if (l->valuation < diag->valuation) {
        std::ostringstream msg;
        msg << "q -> 0 limit diverges at (p=" << p << ", q=" << q
            << "); envelope construction failed";
        throw std::domain_error(msg.str());
      }
      S.entry[static_cast<size_t>(p)][static_cast<size_t>(q)] =
          RationalChar(dvalue * l->coeff, diag->coeff);
    }
  }
  return S;
}

AxiomReport check_axioms(const StabMatrix& S) {
  AxiomReport rep;
  const HypertoricData& data = S.data;
  RestrictionContext ctx = make_restriction_context(data, "t", S.entry[0][0].lattice().scale());
  const int m = ctx.point_count();
  AttractingOrder order = attracting_order(data, ctx.points, data.zeta);

  {
    bool ok = true;
    std::string detail;
    for (int p = 0; p < m && ok; ++p)
      for (int q = 0; q < m && ok; ++q)
        if (!order.less_equal(q, p) && !S.at(p, q).is_zero()) {
          ok = false;
          detail = "Stab(" + ctx.point(p).name + ") does not vanish at " + ctx.point(q).name;
        }
    rep.checks.push_back({"support", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    for (int p = 0; p < m && ok; ++p) {
      LaurentPoly dv = diagonal_value(ctx, p, data.zeta, S.polarization, S.opposite);
      if (!S.at(p, p).equals(dv)) {
        ok = false;
        detail = "diagonal at " + ctx.point(p).name + " differs from the normalization";
      }
    }
    rep.checks.push_back({"diagonal_normalization", ok, detail});
  }
  {
    // hbar -> 1 specialization of the diagonal equals wedge(T^{1/2}|_p).
    bool ok = true;
    std::string detail;
    for (int p = 0; p < m && ok; ++p) {
      LaurentPoly half = S.opposite
                             ? opposite_polarization_restriction(ctx, p, S.polarization)
                             : polarization_restriction(ctx, p, S.polarization);
      RationalChar expected =
          wedge_star_omitting_trivial(half.specialized_axis_to_one(ctx.hbar_axis));
      RationalChar got(S.at(p, p).num().specialized_axis_to_one(ctx.hbar_axis),
                       S.at(p, p).den().specialized_axis_to_one(ctx.hbar_axis));
      if (!got.equals(expected)) {
        ok = false;
        detail = "hbar->1 identity fails at " + ctx.point(p).name;
      }
    }
    rep.checks.push_back({"diagonal_hbar_to_one", ok, detail});
  }
  {
    bool ok = true;
    std::string detail;
    std::vector<int> t_axes;
    for (int i = 0; i < data.a_rank(); ++i) t_axes.push_back(i);
    for (int p = 0; p < m && ok; ++p) {
      RatPoint shift_p;
      {
        ExpVec sp = slope_restriction(ctx, p, S.slope);
        for (int i : t_axes) shift_p.push_back(ctx.lat.exponent_of(sp, i));
      }
      for (int q = 0; q < m && ok; ++q) {
        if (S.at(p, q).is_zero()) continue;
        RatPoint shift_q;
        ExpVec sq = slope_restriction(ctx, q, S.slope);
        for (int i : t_axes) shift_q.push_back(ctx.lat.exponent_of(sq, i));
        LaurentPoly lhs = S.at(p, q).num() * S.at(q, q).den();
        LaurentPoly rhs = S.at(q, q).num() * S.at(p, q).den();
        DegreePolytope dl = deg_on_axes(lhs, t_axes).translated(shift_p);
        DegreePolytope dr = deg_on_axes(rhs, t_axes).translated(shift_q);
        if (!dr.contains(dl)) {
          ok = false;
          detail = "degree condition fails for Stab(" + ctx.point(p).name + ") at " +
                   ctx.point(q).name;
        }
      }
    }
    rep.checks.push_back({"degree", ok, detail});
  }
  return rep;
}

RationalChar euler_pairing_space(const RestrictionContext& ctx,
                                 const std::vector<RationalChar>& a,
                                 const std::vector<RationalChar>& b) {
  const CharLattice& lat = ctx.lat;
  const int m = ctx.point_count();
  if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m)
    throw std::invalid_argument("one restriction per fixed point required");

  bool shared = true;
  for (int i = 1; i < m && shared; ++i)
    shared = a[static_cast<size_t>(i)].den() == a[0].den() &&
             b[static_cast<size_t>(i)].den() == b[0].den();

  std::vector<std::pair<LaurentPoly, LaurentPoly>> terms;
  for (int x = 0; x < m; ++x) {
    LaurentPoly denom = LaurentPoly::one(lat);
    for (const auto& sw : signed_weights(tangent_class(ctx, x))) {
      ExpVec w = kLocalizationDenominator == DenomConvention::wedge_tangent ? sw.w : negate(sw.w);
      if (is_zero(w)) continue;  // omitted trivial factor
      LaurentPoly f = LaurentPoly::one(lat);
      f.add_term(w, Rational(-1));
      denom *= f;
    }
    if (shared) {
      terms.push_back({a[static_cast<size_t>(x)].num() * b[static_cast<size_t>(x)].num(), denom});
    } else {
      terms.push_back({a[static_cast<size_t>(x)].num() * b[static_cast<size_t>(x)].num(),
                       denom * a[static_cast<size_t>(x)].den() * b[static_cast<size_t>(x)].den()});
    }
  }
  RationalChar sum = sum_ratios(lat, terms);
  if (shared) sum = RationalChar(sum.num(), sum.den() * a[0].den() * b[0].den());
  return sum;
}

PairingReport duality_pairing(const StabMatrix& S, const StabMatrix& S_op) {
  RestrictionContext ctx =
      make_restriction_context(S.data, "t", S.entry[0][0].lattice().scale());
  const int m = ctx.point_count();
  PairingReport rep;
  rep.value.assign(static_cast<size_t>(m), std::vector<RationalChar>());
  rep.is_identity = true;
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      RationalChar v = euler_pairing_space(ctx, S.entry[static_cast<size_t>(p)],
                                           S_op.entry[static_cast<size_t>(q)]);
      bool good = (p == q) ? v.is_one() : v.is_zero();
      if (!good) rep.is_identity = false;
      rep.value[static_cast<size_t>(p)].push_back(std::move(v));
    }
  }
  return rep;
}

}  // namespace hypertoric
