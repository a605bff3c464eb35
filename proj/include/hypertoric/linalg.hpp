#pragma once

#include <vector>

#include "hypertoric/lattice.hpp"

namespace hypertoric {

// Exact linear algebra on small integer matrices (lattice maps).

Rational det_exact(const IntMat& m);
int rank_exact(const IntMat& m);

// Inverse of a square integer matrix with det +-1; throws if not unimodular.
IntMat unimodular_inverse(const IntMat& m);

// Diagonal of the Smith normal form (non-negative, divisibility chain).
std::vector<Int> smith_diagonal(const IntMat& m);

// Every square submatrix has determinant in {-1, 0, 1}. On failure reports
// the offending row/column sets.
struct UnimodularityReport {
  bool ok = true;
  std::vector<int> rows, cols;
  Rational det;
};
UnimodularityReport totally_unimodular(const IntMat& m);

// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

}  // namespace hypertoric
