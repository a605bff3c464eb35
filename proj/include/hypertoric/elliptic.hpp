#pragma once

#include "hypertoric/qseries.hpp"
#include "hypertoric/restriction.hpp"

namespace hypertoric {

// Lattice of the coordinate characters of T*C^E on both sides of the
// product, before applying the Kirwan map: one axis per x_e, one per
// x-check_e, and the shared hbar.
CharLattice prekirwan_lattice(const HypertoricData& data, Int scale = 2);

struct PreKirwanAxes {
  int x0;       // first x axis
  int xc0;      // first dual axis
  int hbar;
};
PreKirwanAxes prekirwan_axes(const HypertoricData& data);

// The duality interface as a truncated q-series: prod_e theta(x_e xc_e) on
// the pre-Kirwan lattice.
QSeries interface_series(const HypertoricData& data, const Rational& order, Int scale = 2);

// Substitute the tautological characters by their fixed-point values:
// x_e -> u_e|_q, xc_e -> ucheck_e|_{p!} (dual hbar inverted).
QSeries restrict_series(const JointContext& jc, const QSeries& series, int q_index,
                        int p_dual_index);

// Direct product of restricted theta factors; equals restrict_series applied
// to interface_series.
QSeries elliptic_stab_restriction(const JointContext& jc, int p_dual_index, int q_index,
                                  const Rational& order);

}  // namespace hypertoric
