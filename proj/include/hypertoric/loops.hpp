#pragma once

#include "hypertoric/elliptic.hpp"

namespace hypertoric {

// Truncated loop-space index data: Fourier levels -N..N over each index.
struct LoopData {
  HypertoricData base;
  Int level;  // N
};

// One factor of the positive-loop polarization class: the coordinate
// character at (e, level), inverted for negative levels.
struct LoopSpecEntry {
  int e;
  Int level;
  bool inverted;
};

// The product over L_N E defining xi of the positive-loop polarization.
std::vector<LoopSpecEntry> xi_positive_loops_raw(const LoopData& ld);

// Substitute chi_{e,k} -> q^k x_e and expand on the pre-Kirwan lattice:
// prod_e (1 - X_e) prod_{0<k<=N} (1 - q^k X_e)(1 - q^k X_e^{-1}) truncated.
// Requires order <= N.
QSeries xi_positive_loops(const LoopData& ld, const Rational& order, Int scale = 2);

struct MainTheoremRow {
  int p, q;
  bool pass;
  bool trivially_zero;  // both sides vanish at the pair
  std::string unit;     // canonical monomial text of the pair's unit
};

struct MainTheoremReport {
  std::vector<MainTheoremRow> rows;
  bool unit_consistent = false;  // one global unit class fits every pair
  std::string global_unit;       // symbolic description of the fitted unit
  bool matches_half_twist = false;  // sign x (prod u_e ucheck_e)^{+-1/2} form
  bool ok() const {
    if (!unit_consistent) return false;
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

// Coefficientwise comparison of xi(L+) against the uniformized interface,
// through the given order, up to one global unit computed from the q^0
// terms and reported.
MainTheoremReport main_theorem_check(const HypertoricData& data, const Rational& order);

}  // namespace hypertoric
