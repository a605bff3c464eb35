#include "hypertoric/xi.hpp"

#include <sstream>

namespace hypertoric {

SubspaceSpec full_polarization_spec(int n) {
  SubspaceSpec s;
  for (int e = 0; e < n; ++e) s.push_back({e, false});
  return s;
}

LaurentPoly xi_restriction(const JointContext& jc, const SubspaceSpec& spec,
                           int p_index, int q_dual_index) {
  LaurentPoly out = LaurentPoly::one(jc.lat);
  for (const auto& entry : spec) {
    ExpVec arg = joint_u(jc, p_index, entry.e) + joint_u_dual(jc, q_dual_index, entry.e);
    if (entry.inverted) arg = negate(arg);
    LaurentPoly factor = LaurentPoly::one(jc.lat);
    factor.add_term(arg, Rational(-1));
    out *= factor;
  }
  return out;
}

bool attr_n_member(const HypertoricData& data, const std::vector<FixedPoint>& points,
                   int source, int member, const IntVec& zeta) {
  const FixedPoint& s = points.at(static_cast<size_t>(source));
  const FixedPoint& m = points.at(static_cast<size_t>(member));
  for (int e : s.base) {
    if (m.contains(e)) continue;
    Int a = s.alpha.at(e).dot(zeta);
    Int b = m.beta_p.at(e).dot(data.eta);
    if (a * b <= 0) return false;
  }
  return true;
}

AttractingOrder attracting_order(const HypertoricData& data,
                                 const std::vector<FixedPoint>& points, const IntVec& zeta) {
  const int m = static_cast<int>(points.size());
  AttractingOrder ord;
  ord.le.assign(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      ord.le[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          (a == b) || attr_n_member(data, points, b, a, zeta);
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (ord.le[static_cast<size_t>(a)][static_cast<size_t>(k)] &&
            ord.le[static_cast<size_t>(k)][static_cast<size_t>(b)])
          ord.le[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  return ord;
}

XiMatrix xi_matrix(const JointContext& jc) {
  XiMatrix m;
  SubspaceSpec spec = full_polarization_spec(jc.data.n());
  m.entry.resize(static_cast<size_t>(jc.points()));
  for (int p = 0; p < jc.points(); ++p) {
    m.entry[static_cast<size_t>(p)].resize(static_cast<size_t>(jc.points()));
    for (int q = 0; q < jc.points(); ++q) {
      int qd = dual_index(jc.side_x.points, jc.side_dual.points, q);
      m.entry[static_cast<size_t>(p)][static_cast<size_t>(q)] = xi_restriction(jc, spec, p, qd);
    }
  }
  return m;
}

XiReport check_vanishing(const JointContext& jc, const XiMatrix& m) {
  XiReport rep;
  for (int p = 0; p < jc.points(); ++p)
    for (int q = 0; q < jc.points(); ++q) {
      bool member = attr_n_member(jc.data, jc.side_x.points, q, p, jc.data.zeta);
      bool zero = m.entry[static_cast<size_t>(p)][static_cast<size_t>(q)].is_zero();
      bool pass = member ? !zero : zero;
      std::ostringstream d;
      if (!pass)
        d << (member ? "entry vanishes although p lies in the attracting set"
                     : "entry nonzero although p avoids the attracting set");
      rep.rows.push_back({p, q, pass, d.str()});
    }
  return rep;
}

LaurentPoly diagonal_wedge_class(const JointContext& jc, int p_index, int q_dual_index) {
  LaurentPoly out = LaurentPoly::one(jc.lat);
  const FixedPoint& p = jc.side_x.point(p_index);
  for (int e : p.base) {
    ExpVec w = joint_u(jc, p_index, e);
    w[static_cast<size_t>(jc.hbar_axis)] = 0;
    LaurentPoly f = LaurentPoly::one(jc.lat);
    f.add_term(w, Rational(-1));
    out *= f;
  }
  const FixedPoint& qd = jc.side_dual.point(q_dual_index);
  for (int e : qd.base) {
    ExpVec w = joint_u_dual(jc, q_dual_index, e);
    w[static_cast<size_t>(jc.hbar_axis)] = 0;
    LaurentPoly f = LaurentPoly::one(jc.lat);
    f.add_term(w, Rational(-1));
    out *= f;
  }
  return out;
}

XiReport check_degree_bound(const JointContext& jc, const XiMatrix& m) {
  XiReport rep;
  std::vector<int> torus_axes;
  for (int i = 0; i < jc.lat.rank(); ++i)
    if (i != jc.hbar_axis) torus_axes.push_back(i);

  for (int p = 0; p < jc.points(); ++p) {
    for (int q = 0; q < jc.points(); ++q) {
      int qd = dual_index(jc.side_x.points, jc.side_dual.points, q);
      const LaurentPoly& entry = m.entry[static_cast<size_t>(p)][static_cast<size_t>(q)];
      LaurentPoly bound = diagonal_wedge_class(jc, p, qd);
      bool pass = true;
      std::string detail;
      if (p == q) {
        LaurentPoly specialized = entry.specialized_axis_to_one(jc.hbar_axis);
        pass = (specialized == bound);
        if (!pass) detail = "diagonal entry differs from the wedge class";
      } else if (!entry.is_zero()) {
        Boundedness b = is_bounded(entry, bound, torus_axes);
        pass = (b != Boundedness::unbounded);
        if (!pass) detail = "support leaves the polarization polytope";
      }
      rep.rows.push_back({p, q, pass, detail});
    }
  }
  return rep;
}

}  // namespace hypertoric
