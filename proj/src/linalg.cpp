#include "hypertoric/linalg.hpp"

#include <stdexcept>

namespace hypertoric {

namespace {

RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = rat(m(i, j));
  return r;
}

// Gaussian elimination; returns rank, and det when square.
int eliminate(RatMat& a, Rational* det) {
  int rows = static_cast<int>(a.rows());
  int cols = static_cast<int>(a.cols());
  Rational d(1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (sgn(a(i, col)) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
      d = -d;
    }
    d *= a(rank, col);
    Rational inv = Rational(1) / a(rank, col);
    a.row(rank) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      if (sgn(a(i, col)) == 0) continue;
      a.row(i) -= a(i, col) * a.row(rank);
    }
    ++rank;
  }
  if (det) *det = (rank == rows && rows == cols) ? d : Rational(0);
  return rank;
}

}  // namespace

Rational det_exact(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  if (m.rows() == 0) return Rational(1);
  RatMat a = to_rational(m);
  Rational d;
  eliminate(a, &d);
  return d;
}

int rank_exact(const IntMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  RatMat a = to_rational(m);
  return eliminate(a, nullptr);
}

IntMat unimodular_inverse(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = static_cast<int>(m.rows());
  Rational d = det_exact(m);
  if (!(d == 1 || d == -1)) throw std::domain_error("matrix is not unimodular");
  // Solve m X = I by elimination on [m | I].
  RatMat a(n, 2 * n);
  a.setZero();
  a.block(0, 0, n, n) = to_rational(m);
  for (int i = 0; i < n; ++i) a(i, n + i) = Rational(1);
  eliminate(a, nullptr);
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = a(i, n + j);
      if (!is_integer(v)) throw std::logic_error("unimodular inverse not integral");
      inv(i, j) = static_cast<Int>(v.get_num().get_si());
    }
  return inv;
}

std::vector<Int> smith_diagonal(const IntMat& m) {
  int rows = static_cast<int>(m.rows());
  int cols = static_cast<int>(m.cols());
  std::vector<std::vector<mpz_class>> a(static_cast<size_t>(rows),
                                        std::vector<mpz_class>(static_cast<size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);

  auto nonzero_below = [&](int t) {
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) return std::pair<int, int>{i, j};
    return std::pair<int, int>{-1, -1};
  };

  int t = 0;
  std::vector<Int> diag;
  while (t < rows && t < cols) {
    auto [pi, pj] = nonzero_below(t);
    if (pi < 0) break;
    std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(pi)]);
    for (int i = 0; i < rows; ++i)
      std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(t)],
                a[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        mpz_class& p = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
        mpz_class& x = a[static_cast<size_t>(i)][static_cast<size_t>(t)];
        if (x == 0) continue;
        mpz_class quot = x / p;
        for (int j = t; j < cols; ++j)
          a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
              quot * a[static_cast<size_t>(t)][static_cast<size_t>(j)];
        if (a[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) {
          std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(i)]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        mpz_class& p = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
        mpz_class& x = a[static_cast<size_t>(t)][static_cast<size_t>(j)];
        if (x == 0) continue;
        mpz_class quot = x / p;
        for (int i = t; i < rows; ++i)
          a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
              quot * a[static_cast<size_t>(i)][static_cast<size_t>(t)];
        if (a[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) {
          for (int i = 0; i < rows; ++i)
            std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(t)],
                      a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
          clean = false;
        }
      }
    }
    diag.push_back(std::abs(static_cast<Int>(a[static_cast<size_t>(t)][static_cast<size_t>(t)].get_si())));
    ++t;
  }
  // Enforce the divisibility chain.
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j)
      if (diag[j] % diag[i] != 0) {
        Int g = 0, a0 = diag[i], b0 = diag[j];
        while (b0) {
          g = b0;
          b0 = a0 % b0;
          a0 = g;
        }
        Int l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
  return diag;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

UnimodularityReport totally_unimodular(const IntMat& m) {
  int rows = static_cast<int>(m.rows());
  int cols = static_cast<int>(m.cols());
  int maxsz = std::min(rows, cols);
  for (int sz = 1; sz <= maxsz; ++sz) {
    for (const auto& rsel : subsets_of_size(rows, sz)) {
      for (const auto& csel : subsets_of_size(cols, sz)) {
        IntMat sub(sz, sz);
        for (int i = 0; i < sz; ++i)
          for (int j = 0; j < sz; ++j)
            sub(i, j) = m(rsel[static_cast<size_t>(i)], csel[static_cast<size_t>(j)]);
        Rational d = det_exact(sub);
        if (!(d == 0 || d == 1 || d == -1)) {
          UnimodularityReport r;
          r.ok = false;
          r.rows = rsel;
          r.cols = csel;
          r.det = d;
          return r;
        }
      }
    }
  }
  return UnimodularityReport{};
}

}  // namespace hypertoric
