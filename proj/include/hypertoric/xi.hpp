#pragma once

#include "hypertoric/algebra.hpp"
#include "hypertoric/restriction.hpp"

namespace hypertoric {

// Coordinate subspace selection: which Darboux character of index e enters
// the class. `inverted` entries contribute (1 - (u ucheck)^{-1}) factors, the
// shape the negative loop levels take.
struct XiEntry {
  int e;
  bool inverted = false;
};
using SubspaceSpec = std::vector<XiEntry>;

SubspaceSpec full_polarization_spec(int n);

// Restriction of prod (1 - u_e ucheck_e) to the fixed-point pair, on the
// joint lattice.
LaurentPoly xi_restriction(const JointContext& jc, const SubspaceSpec& spec,
                           int p_index, int q_dual_index);

// member lies in the attracting lagrangian of source:
// <alpha^source_e, zeta> <beta^member_e, eta> > 0 for all e in
// base(source) \ base(member).
bool attr_n_member(const HypertoricData& data, const std::vector<FixedPoint>& points,
                   int source, int member, const IntVec& zeta);

// Transitive closure of { member <= source if attr_n_member(source, member) }.
struct AttractingOrder {
  std::vector<std::vector<bool>> le;  // le[a][b]: a <= b
  bool less_equal(int a, int b) const { return le[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
};
AttractingOrder attracting_order(const HypertoricData& data,
                                 const std::vector<FixedPoint>& points, const IntVec& zeta);

// Full restriction matrix of xi over all fixed-point pairs.
struct XiMatrix {
  std::vector<std::vector<LaurentPoly>> entry;  // [p][q]
};
XiMatrix xi_matrix(const JointContext& jc);

struct XiReportRow {
  int p, q;
  bool pass;
  std::string detail;
};
struct XiReport {
  std::vector<XiReportRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

// Zero pattern must match the attracting-set membership table exactly.
XiReport check_vanishing(const JointContext& jc, const XiMatrix& m);

// Degree bound on the Hamiltonian axes; exact class equality on the diagonal.
XiReport check_degree_bound(const JointContext& jc, const XiMatrix& m);

// The diagonal comparison class wedge(T^{1/2}_p) (x) wedge(T^{1/2}_{p!}) with
// hbar specialized to 1, on the joint lattice.
LaurentPoly diagonal_wedge_class(const JointContext& jc, int p_index, int q_dual_index);

}  // namespace hypertoric
