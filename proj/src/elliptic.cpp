#include "hypertoric/elliptic.hpp"

namespace hypertoric {

CharLattice prekirwan_lattice(const HypertoricData& data, Int scale) {
  std::vector<std::string> labels;
  for (const auto& l : data.labels) labels.push_back("x_" + l);
  for (const auto& l : data.labels) labels.push_back("xc_" + l);
  labels.push_back("hbar");
  return CharLattice(labels, scale);
}

PreKirwanAxes prekirwan_axes(const HypertoricData& data) {
  return PreKirwanAxes{0, data.n(), 2 * data.n()};
}

QSeries interface_series(const HypertoricData& data, const Rational& order, Int scale) {
  CharLattice lat = prekirwan_lattice(data, scale);
  PreKirwanAxes ax = prekirwan_axes(data);
  QSeries s = QSeries::one(lat, order);
  for (int e = 0; e < data.n(); ++e) {
    ExpVec arg = lat.unit(ax.x0 + e) + lat.unit(ax.xc0 + e);
    s *= theta_expand(lat, arg, order);
  }
  return s;
}

QSeries restrict_series(const JointContext& jc, const QSeries& series, int q_index,
                        int p_dual_index) {
  const HypertoricData& data = jc.data;
  PreKirwanAxes ax = prekirwan_axes(data);
  const CharLattice& src = series.lattice();
  if (src.scale() != jc.lat.scale()) throw std::logic_error("scale mismatch in restriction");
  std::vector<ExpVec> images(static_cast<size_t>(src.rank()));
  for (int e = 0; e < data.n(); ++e) {
    images[static_cast<size_t>(ax.x0 + e)] = joint_u(jc, q_index, e);
    images[static_cast<size_t>(ax.xc0 + e)] = joint_u_dual(jc, p_dual_index, e);
  }
  images[static_cast<size_t>(ax.hbar)] = jc.lat.unit(jc.hbar_axis);
  return series.mapped(jc.lat, [&](const LaurentPoly& c) {
    return c.substituted(jc.lat, images);
  });
}

QSeries elliptic_stab_restriction(const JointContext& jc, int p_dual_index, int q_index,
                                  const Rational& order) {
  QSeries s = QSeries::one(jc.lat, order);
  for (int e = 0; e < jc.data.n(); ++e) {
    ExpVec arg = joint_u(jc, q_index, e) + joint_u_dual(jc, p_dual_index, e);
    s *= theta_expand(jc.lat, arg, order);
  }
  return s;
}

}  // namespace hypertoric
