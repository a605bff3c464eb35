#include "hypertoric/arrangement.hpp"

#include <sstream>
#include <stdexcept>

namespace hypertoric {

namespace {

std::string subset_name(const HypertoricData& data, const std::vector<int>& sel) {
  std::string s = "{";
  for (size_t i = 0; i < sel.size(); ++i) {
    if (i) s += ",";
    s += data.labels[static_cast<size_t>(sel[i])];
  }
  return s + "}";
}

std::vector<int> complement(int n, const std::vector<int>& sel) {
  std::vector<bool> in(static_cast<size_t>(n), false);
  for (int e : sel) in[static_cast<size_t>(e)] = true;
  std::vector<int> out;
  for (int e = 0; e < n; ++e)
    if (!in[static_cast<size_t>(e)]) out.push_back(e);
  return out;
}

FixedPoint make_point(const HypertoricData& data, const std::vector<int>& base) {
  const int n = data.n();
  const int k = data.k();
  const int ar = data.a_rank();
  FixedPoint p;
  p.base = base;
  p.in_base.assign(static_cast<size_t>(n), false);
  for (int e : base) p.in_base[static_cast<size_t>(e)] = true;
  p.name = subset_name(data, base);

  // alpha: rows of (beta|_b)^{-1} pair dually with the columns beta(e).
  IntMat M(ar, ar);
  for (int j = 0; j < ar; ++j) M.col(j) = data.beta.col(base[static_cast<size_t>(j)]);
  IntMat Minv = unimodular_inverse(M);
  for (int j = 0; j < ar; ++j) p.alpha[base[static_cast<size_t>(j)]] = Minv.row(j).transpose();

  // beta_p: columns of (rows of partial on the complement)^{-1}.
  std::vector<int> comp = complement(n, base);
  IntMat P(k, k);
  for (int i = 0; i < k; ++i) P.row(i) = data.partial.row(comp[static_cast<size_t>(i)]);
  IntMat Pinv = unimodular_inverse(P);
  for (int i = 0; i < k; ++i) p.beta_p[comp[static_cast<size_t>(i)]] = Pinv.col(i);
  return p;
}

}  // namespace

std::vector<FixedPoint> enumerate_bases(const HypertoricData& data) {
  std::vector<FixedPoint> out;
  for (const auto& sel : subsets_of_size(data.n(), data.a_rank())) {
    IntMat M(data.a_rank(), data.a_rank());
    for (int j = 0; j < data.a_rank(); ++j) M.col(j) = data.beta.col(sel[static_cast<size_t>(j)]);
    Rational d = det_exact(M);
    if (d == 1 || d == -1) out.push_back(make_point(data, sel));
  }
  return out;
}

ValidationReport validate(const HypertoricData& data) {
  ValidationReport rep;
  const int n = data.n();
  const int k = data.k();
  const int ar = data.a_rank();

  if (static_cast<int>(data.labels.size()) != n || data.beta.cols() != n ||
      data.beta.rows() != ar || data.eta.size() != k || data.zeta.size() != ar)
    throw std::invalid_argument("hypertoric data dimensions are inconsistent");

  {
    IntMat prod = data.beta * data.partial;
    bool ok = prod.isZero();
    rep.checks.push_back({"sequence_composes_to_zero", ok, ok ? "" : "beta * partial != 0"});
  }
  {
    bool ok = rank_exact(data.partial) == k;
    rep.checks.push_back({"partial_injective", ok, ok ? "" : "rank(partial) < k"});
  }
  {
    bool ok = rank_exact(data.beta) == ar;
    rep.checks.push_back({"beta_surjective_rationally", ok, ok ? "" : "rank(beta) < n-k"});
  }
  {
    std::vector<Int> d = smith_diagonal(data.partial);
    bool ok = static_cast<int>(d.size()) == k;
    for (Int v : d)
      if (v != 1) ok = false;
    std::ostringstream detail;
    if (!ok) {
      detail << "Smith diagonal of partial:";
      for (Int v : d) detail << " " << v;
    }
    rep.checks.push_back({"cokernel_torsion_free", ok, detail.str()});
  }
  {
    UnimodularityReport u = totally_unimodular(data.beta);
    std::ostringstream detail;
    if (!u.ok) {
      detail << "submatrix rows";
      for (int r : u.rows) detail << " " << r;
      detail << " cols";
      for (int c : u.cols) detail << " " << c;
      detail << " has det " << u.det.get_str();
    }
    rep.checks.push_back({"beta_totally_unimodular", u.ok, detail.str()});
  }
  {
    // No cocharacter of G fixes all but one coordinate: deleting any single
    // row of partial must keep full rank.
    bool ok = true;
    std::string detail;
    for (int e = 0; e < n && ok; ++e) {
      IntMat reduced(n - 1, k);
      int r = 0;
      for (int i = 0; i < n; ++i) {
        if (i == e) continue;
        reduced.row(r++) = data.partial.row(i);
      }
      if (k > 0 && rank_exact(reduced) < k) {
        ok = false;
        detail = "a cocharacter moves only coordinate " + data.labels[static_cast<size_t>(e)];
      }
    }
    rep.checks.push_back({"no_single_coordinate_cocharacter", ok, detail});
  }
  {
    // eta generic: never inside a hyperplane spanned by k-1 of the rows of
    // partial (the GIT walls of the abelian quotient).
    bool ok = true;
    std::string detail;
    if (k > 0) {
      if (data.eta.isZero()) {
        ok = false;
        detail = "eta = 0 lies on every wall";
      } else {
        for (const auto& sel : subsets_of_size(n, k - 1)) {
          IntMat span(k - 1, k);
          for (int i = 0; i < k - 1; ++i) span.row(i) = data.partial.row(sel[static_cast<size_t>(i)]);
          if (k > 1 && rank_exact(span) < k - 1) continue;  // degenerate wall
          IntMat with_eta(k, k);
          with_eta.topRows(k - 1) = span;
          with_eta.row(k - 1) = data.eta.transpose();
          if (rank_exact(with_eta) < k) {
            ok = false;
            detail = "eta lies on the wall spanned by rows " + subset_name(data, sel);
            break;
          }
        }
      }
    }
    rep.checks.push_back({"eta_generic", ok, detail});
  }
  {
    // zeta generic, checked a posteriori on the enumerated bases.
    bool ok = true;
    std::string detail;
    for (const auto& p : enumerate_bases(data)) {
      for (const auto& [e, a] : p.alpha) {
        Int pairing = a.dot(data.zeta);
        if (pairing == 0) {
          ok = false;
          detail = "alpha at " + p.name + ", index " + data.labels[static_cast<size_t>(e)] +
                   " pairs to zero with zeta";
          break;
        }
      }
      if (!ok) break;
    }
    rep.checks.push_back({"zeta_generic", ok, detail});
  }
  rep.notes.push_back(
      "fixed-point lifts are calibrated so that u_e|_p = hbar exactly when "
      "<beta_p_e, eta> > 0; the coordinate-lagrangian description with the "
      "opposite marking is not used");
  return rep;
}

HypertoricData gale_dual(const HypertoricData& data) {
  HypertoricData d;
  d.labels = data.labels;
  d.partial = data.beta.transpose();
  d.beta = data.partial.transpose();
  d.eta = -data.zeta;
  d.zeta = -data.eta;
  return d;
}

FixedPoint dual_point(const HypertoricData& data, const FixedPoint& p) {
  HypertoricData dual = gale_dual(data);
  return [&] {
    std::vector<int> comp;
    for (int e = 0; e < data.n(); ++e)
      if (!p.contains(e)) comp.push_back(e);
    for (auto& fp : enumerate_bases(dual))
      if (fp.base == comp) return fp;
    throw std::logic_error("complement of a base is not a dual base");
  }();
}

int dual_index(const std::vector<FixedPoint>& points,
               const std::vector<FixedPoint>& dual_points, int i) {
  const FixedPoint& p = points.at(static_cast<size_t>(i));
  for (size_t j = 0; j < dual_points.size(); ++j) {
    bool match = true;
    for (int e = 0; e < static_cast<int>(p.in_base.size()); ++e)
      if (dual_points[j].contains(e) == p.contains(e)) {
        match = false;
        break;
      }
    if (match) return static_cast<int>(j);
  }
  throw std::logic_error("dual fixed point not found");
}

}  // namespace hypertoric
