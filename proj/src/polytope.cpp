#include "hypertoric/polytope.hpp"

#include <cassert>
#include <stdexcept>

namespace hypertoric {

namespace {

// Dense exact simplex for  max c.x  s.t.  A x = b, x >= 0.
// Returns false if infeasible; otherwise writes the optimum. The feasible
// regions used here (convex combinations) are bounded, so no unbounded
// objective handling beyond an assertion is needed.
class Simplex {
 public:
  Simplex(RatMat A, RatVec b, RatVec c)
      : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {}

  bool solve(Rational* optimum) {
    const int m = static_cast<int>(A_.rows());
    const int n = static_cast<int>(A_.cols());

    for (int i = 0; i < m; ++i)
      if (sgn(b_(i)) < 0) {
        A_.row(i) = -A_.row(i);
        b_(i) = -b_(i);
      }

    // Phase 1 tableau with artificial variables.
    int total = n + m;
    T_.setZero(m + 1, total + 1);
    T_.block(0, 0, m, n) = A_;
    for (int i = 0; i < m; ++i) {
      T_(i, n + i) = Rational(1);
      T_(i, total) = b_(i);
    }
    basis_.resize(m);
    for (int i = 0; i < m; ++i) basis_[i] = n + i;
    // Phase-1 objective: minimize sum of artificials == maximize -sum. The
    // basic artificial columns must start with reduced cost zero.
    for (int j = 0; j <= total; ++j) {
      Rational s(0);
      for (int i = 0; i < m; ++i) s += T_(i, j);
      T_(m, j) = (j >= n && j < total) ? Rational(0) : -s;
    }
    run(n + m);
    if (sgn(T_(m, total)) != 0) return false;  // infeasible

    // Drive any artificial out of the basis (degenerate rows).
    for (int i = 0; i < m; ++i) {
      if (basis_[i] >= n) {
        int pivot_col = -1;
        for (int j = 0; j < n; ++j)
          if (sgn(T_(i, j)) != 0) {
            pivot_col = j;
            break;
          }
        if (pivot_col >= 0)
          pivot(i, pivot_col);
        // else: redundant row, harmless.
      }
    }

    // Phase 2: replace objective row by c (restricted to real variables),
    // expressed in terms of the current basis.
    for (int j = 0; j <= total; ++j) T_(m, j) = Rational(0);
    for (int j = 0; j < n; ++j) T_(m, j) = -c_(j);
    for (int i = 0; i < m; ++i) {
      if (basis_[i] < n && sgn(c_(basis_[i])) != 0) {
        Rational f = c_(basis_[i]);
        for (int j = 0; j <= total; ++j) T_(m, j) += f * T_(i, j);
      }
    }
    // Forbid artificials from re-entering: treat their columns as blocked.
    run(n);
    if (optimum) *optimum = T_(m, total);
    return true;
  }

 private:
  void run(int allowed_cols) {
    const int m = static_cast<int>(A_.rows());
    const int total = static_cast<int>(T_.cols()) - 1;
    for (;;) {
      int col = -1;  // Bland: smallest index with negative reduced cost
      for (int j = 0; j < allowed_cols; ++j)
        if (sgn(T_(m, j)) < 0) {
          col = j;
          break;
        }
      if (col < 0) return;
      int row = -1;
      Rational best(0);
      for (int i = 0; i < m; ++i) {
        if (sgn(T_(i, col)) > 0) {
          Rational ratio = T_(i, total) / T_(i, col);
          if (row < 0 || ratio < best || (ratio == best && basis_[i] < basis_[row])) {
            row = i;
            best = ratio;
          }
        }
      }
      // Bounded feasible sets only.
      if (row < 0) throw std::logic_error("unbounded LP in hull computation");
      pivot(row, col);
    }
  }

  void pivot(int row, int col) {
    const int m = static_cast<int>(A_.rows());
    const int total = static_cast<int>(T_.cols()) - 1;
    Rational p = T_(row, col);
    for (int j = 0; j <= total; ++j) T_(row, j) /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      if (sgn(T_(i, col)) == 0) continue;
      Rational f = T_(i, col);
      for (int j = 0; j <= total; ++j) T_(i, j) -= f * T_(row, j);
    }
    basis_[row] = col;
  }

  RatMat A_;
  RatVec b_;
  RatVec c_;
  RatMat T_;
  std::vector<int> basis_;
};

}  // namespace

MarginResult hull_margin(const std::vector<RatPoint>& points, const RatPoint& v,
                         const RatPoint& direction) {
  if (points.empty()) return {false, Rational(0)};
  const int d = static_cast<int>(v.size());
  const int m = static_cast<int>(points.size());
  bool has_direction = false;
  for (const auto& x : direction)
    if (!is_zero(x)) has_direction = true;

  // Variables: lambda_1..lambda_m, plus eps when a direction is given.
  const int vars = m + (has_direction ? 1 : 0);
  RatMat A(d + 1, vars);
  RatVec b(d + 1);
  RatVec c(vars);
  A.setZero();
  c.setZero();
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < d; ++i) A(i, j) = points[static_cast<size_t>(j)][static_cast<size_t>(i)];
    A(d, j) = Rational(1);
  }
  for (int i = 0; i < d; ++i) b(i) = v[static_cast<size_t>(i)];
  b(d) = Rational(1);
  if (has_direction) {
    for (int i = 0; i < d; ++i) A(i, m) = -direction[static_cast<size_t>(i)];
    c(m) = Rational(1);
  }

  Simplex lp(A, b, c);
  Rational opt(0);
  if (!lp.solve(&opt)) return {false, Rational(0)};
  return {true, opt};
}

void DegreePolytope::add_point(const RatPoint& p) {
  if (static_cast<int>(p.size()) != dim_)
    throw std::invalid_argument("point dimension mismatch");
  if (seen_.insert(p).second) points_.push_back(p);
}

bool DegreePolytope::contains_point(const RatPoint& v) const {
  RatPoint zero(static_cast<size_t>(dim_), Rational(0));
  return hull_margin(points_, v, zero).feasible;
}

bool DegreePolytope::contains(const DegreePolytope& other) const {
  for (const auto& p : other.points_)
    if (!contains_point(p)) return false;
  return true;
}

bool DegreePolytope::contains_point_interior(const RatPoint& v) const {
  if (!contains_point(v)) return false;
  // v is interior iff a small cross polytope around v fits in the hull:
  // positive margin along every +/- coordinate direction.
  for (int i = 0; i < dim_; ++i) {
    for (int s : {1, -1}) {
      RatPoint d(static_cast<size_t>(dim_), Rational(0));
      d[static_cast<size_t>(i)] = Rational(s);
      MarginResult r = hull_margin(points_, v, d);
      if (!r.feasible || sgn(r.margin) <= 0) return false;
    }
  }
  return true;
}

bool DegreePolytope::contains_interior(const DegreePolytope& other) const {
  for (const auto& p : other.points_)
    if (!contains_point_interior(p)) return false;
  return true;
}

DegreePolytope DegreePolytope::minkowski_sum(const DegreePolytope& other) const {
  if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
  DegreePolytope r(dim_);
  for (const auto& p : points_)
    for (const auto& q : other.points_) {
      RatPoint s(p);
      for (size_t i = 0; i < s.size(); ++i) s[i] += q[i];
      r.add_point(s);
    }
  return r;
}

DegreePolytope DegreePolytope::translated(const RatPoint& shift) const {
  DegreePolytope r(dim_);
  for (const auto& p : points_) {
    RatPoint s(p);
    for (size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    r.add_point(s);
  }
  return r;
}

}  // namespace hypertoric
