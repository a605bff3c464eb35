#include "hypertoric/loops.hpp"

#include <sstream>
#include <stdexcept>

namespace hypertoric {

std::vector<LoopSpecEntry> xi_positive_loops_raw(const LoopData& ld) {
  std::vector<LoopSpecEntry> out;
  for (int e = 0; e < ld.base.n(); ++e) {
    out.push_back({e, 0, false});
    for (Int k = 1; k <= ld.level; ++k) out.push_back({e, k, false});
    for (Int k = -ld.level; k < 0; ++k) out.push_back({e, k, true});
  }
  return out;
}

QSeries xi_positive_loops(const LoopData& ld, const Rational& order, Int scale) {
  if (order > rat(ld.level))
    throw std::invalid_argument("raise truncation level: order exceeds loop level");
  const HypertoricData& data = ld.base;
  CharLattice lat = prekirwan_lattice(data, scale);
  PreKirwanAxes ax = prekirwan_axes(data);
  QSeries s = QSeries::one(lat, order);
  for (const auto& entry : xi_positive_loops_raw(ld)) {
    ExpVec arg = lat.unit(ax.x0 + entry.e) + lat.unit(ax.xc0 + entry.e);
    // chi_{e,k} -> q^k x_e; inverted entries carry the inverse characters.
    Rational qpow = rat(entry.inverted ? -entry.level : entry.level);
    if (entry.inverted) arg = negate(arg);
    if (qpow > order) continue;  // factor is 1 within the truncation
    QSeries f = QSeries::one(lat, order);
    f.add(qpow, LaurentPoly::monomial(lat, arg, Rational(-1)));
    s *= f;
  }
  return s;
}

namespace {

struct UnitCandidate {
  int coeff_sign;  // overall sign per factor
  int exp_sign;    // +1: (u ucheck)^{1/2}; -1: inverse square root
};

ExpVec candidate_exp(const JointContext& jc, int q_index, int p_dual_index, int exp_sign) {
  ExpVec total = jc.lat.zero();
  for (int e = 0; e < jc.data.n(); ++e)
    total = total + joint_u(jc, q_index, e) + joint_u_dual(jc, p_dual_index, e);
  ExpVec half(total.size());
  for (size_t i = 0; i < total.size(); ++i) {
    if (total[i] % 2 != 0) throw std::logic_error("unit exponent off the lattice");
    half[i] = exp_sign * total[i] / 2;
  }
  return half;
}

}  // namespace

MainTheoremReport main_theorem_check(const HypertoricData& data, const Rational& order) {
  JointContext jc = make_joint_context(data, 2);
  mpz_class level_z = (order.get_num() + order.get_den() - 1) / order.get_den();
  Int level = level_z.get_si();
  LoopData ld{data, level};
  QSeries loops = xi_positive_loops(ld, order, 2);
  QSeries interface = interface_series(data, order, 2);

  MainTheoremReport rep;
  const int m = jc.points();
  std::vector<std::pair<int, int>> nonzero_pairs;
  std::vector<Monomial> units;

  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      int qd = dual_index(jc.side_x.points, jc.side_dual.points, q);
      // The theorem restricts the interface to X x q!; rows follow the xi
      // matrix convention entry(p, q) = value at p x q!.
      QSeries lhs = restrict_series(jc, loops, p, qd);
      QSeries rhs = restrict_series(jc, interface, p, qd);
      MainTheoremRow row;
      row.p = p;
      row.q = q;
      LaurentPoly l0 = lhs.coeff(Rational(0));
      LaurentPoly r0 = rhs.coeff(Rational(0));
      if (r0.is_zero() || l0.is_zero()) {
        bool both = lhs.is_zero() && rhs.is_zero();
        row.trivially_zero = both;
        row.pass = both;
        row.unit = "0";
        rep.rows.push_back(row);
        continue;
      }
      row.trivially_zero = false;
      // Shifting by a monomial preserves the term order, so matching leading
      // terms determines the only possible unit.
      Monomial unit(l0.terms().begin()->first, l0.terms().begin()->second);
      unit.exponents = unit.exponents - r0.terms().begin()->first;
      unit.coeff /= r0.terms().begin()->second;
      QSeries shifted = rhs.shifted(Rational(0), LaurentPoly(jc.lat, unit)).truncated(order);
      row.pass = lhs.equal_through(shifted, order);
      row.unit = to_string(LaurentPoly(jc.lat, unit));
      rep.rows.push_back(row);
      nonzero_pairs.push_back({p, qd});
      units.push_back(unit);
    }
  }

  // One global unit class of the form sign x prod (u_e ucheck_e)^{+-1/2}
  // must restrict to every computed pair unit.
  rep.unit_consistent = false;
  for (int coeff_sign : {+1, -1}) {
    for (int exp_sign : {+1, -1}) {
      Rational c = rat(coeff_sign);
      bool all = !units.empty();
      for (size_t i = 0; i < units.size(); ++i) {
        auto [q, pd] = nonzero_pairs[i];
        ExpVec expected = candidate_exp(jc, q, pd, exp_sign);
        Rational expected_coeff = data.n() % 2 == 0 ? Rational(1) : c;
        if (units[i].exponents != expected || units[i].coeff != expected_coeff) {
          all = false;
          break;
        }
      }
      if (all) {
        rep.unit_consistent = true;
        std::ostringstream desc;
        desc << (coeff_sign < 0 ? "(-1)^|E| * " : "");
        desc << "prod_e (u_e uc_e)^(" << (exp_sign > 0 ? "1/2" : "-1/2") << ")";
        rep.global_unit = desc.str();
        rep.matches_half_twist = true;
        break;
      }
    }
    if (rep.unit_consistent) break;
  }
  if (units.empty()) rep.unit_consistent = true;
  return rep;
}

}  // namespace hypertoric
