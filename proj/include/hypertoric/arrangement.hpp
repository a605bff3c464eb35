#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypertoric/linalg.hpp"

namespace hypertoric {

// The combinatorial seed: an exact sequence of character lattices
//   0 -> g --partial--> Z^E --beta--> a -> 0
// together with a GIT character eta of G and a cocharacter zeta of A.
struct HypertoricData {
  std::vector<std::string> labels;  // E, ordered
  IntMat partial;                   // n x k
  IntMat beta;                      // (n-k) x n
  IntVec eta;                       // length k
  IntVec zeta;                      // length n-k

  int n() const { return static_cast<int>(partial.rows()); }
  int k() const { return static_cast<int>(partial.cols()); }
  int a_rank() const { return n() - k(); }

  IntVec beta_column(int e) const { return beta.col(e); }
  IntVec partial_row(int e) const { return partial.row(e).transpose(); }
};

// A base b with its dual-basis data.
struct FixedPoint {
  std::vector<int> base;               // sorted, size n-k
  std::vector<bool> in_base;           // size n
  std::map<int, IntVec> alpha;         // e in base  -> vector in a^dual
  std::map<int, IntVec> beta_p;        // e not in base -> vector in g
  std::string name;                    // "{e1,e2}" style, from labels

  bool contains(int e) const { return in_base[static_cast<size_t>(e)]; }
};

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Structural validation: exactness, total unimodularity, the coordinate
// condition, and genericity of eta and zeta.
ValidationReport validate(const HypertoricData& data);

// All bases in lexicographic order, with alpha and beta_p dual bases.
std::vector<FixedPoint> enumerate_bases(const HypertoricData& data);

// Transpose the sequence and negate the parameters.
HypertoricData gale_dual(const HypertoricData& data);

// The fixed point of the Gale dual indexed by the complement base.
FixedPoint dual_point(const HypertoricData& data, const FixedPoint& p);

// Index of the complement of points[i] within enumerate_bases(gale_dual(data)).
int dual_index(const std::vector<FixedPoint>& points,
               const std::vector<FixedPoint>& dual_points, int i);

}  // namespace hypertoric
