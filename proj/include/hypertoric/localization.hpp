#pragma once

#include "hypertoric/envelopes.hpp"

namespace hypertoric {

// One factor of the fixed-point ratio xi / (wedge T^{1/2} (x) wedge T^{1/2}),
// specialized along zeta x eta^{-1} to classes in (t, hbar).
enum class FactorType { first, second, third, last };

struct PneqqFactor {
  int e;
  FactorType type;
  RationalChar value;        // the displayed ratio, trivial denominator
                             // factors omitted
  RationalChar table_limit;  // t -> infinity value from the proof's case table
};

std::vector<PneqqFactor> pneqq_factors(const JointContext& jc, const SpecializedLattice& sl,
                                       int p_index, int q_index);

struct PneqqResult {
  RationalChar product_limit;  // limit of the full product
  RationalChar table_product;  // product of per-factor limits
  RationalChar expected;       // delta_{pq} * closed form
  bool pass;
};

PneqqResult pneqq_limit(const JointContext& jc, const SpecializedLattice& sl, int p_index,
                        int q_index);

// Closed form (hbar/(1-hbar))^{rk ind_p} (hbar^{-1}/(1-hbar^{-1}))^{rk ind_{p!}}
// on the specialized lattice.
RationalChar pneqq_closed_form(const JointContext& jc, const SpecializedLattice& sl,
                               int p_index);

// Full intertwining check: the normalized pairing of xi against the opposite
// stable envelopes of both sides, specialized and taken to the t -> infinity
// limit, must be delta_{pq} times the closed form.
struct IntertwinerRow {
  int p, q;
  bool bounded;          // every summand bounded along the specialization
  bool pass;
  std::string computed;  // canonical text of the limit
  std::string expected;
};

struct IntertwinerReport {
  std::vector<IntertwinerRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (!r.pass || !r.bounded) return false;
    return true;
  }
};

IntertwinerReport intertwiner_check(const HypertoricData& data, const Slope& slope_x,
                                    const Slope& slope_dual);

}  // namespace hypertoric
