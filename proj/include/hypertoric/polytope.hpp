#pragma once

#include <set>
#include <vector>

#include "hypertoric/laurent.hpp"

namespace hypertoric {

using RatPoint = std::vector<Rational>;

// Support polytope of a class, stored as its generating point set. All hull
// queries are answered by exact rational linear programming.
class DegreePolytope {
 public:
  DegreePolytope() : dim_(0) {}
  explicit DegreePolytope(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool empty() const { return points_.empty(); }
  const std::vector<RatPoint>& points() const { return points_; }

  void add_point(const RatPoint& p);

  // Exact hull membership / containment.
  bool contains_point(const RatPoint& v) const;
  bool contains(const DegreePolytope& other) const;
  // v lies in the topological interior of the hull (full-dimensional sense).
  bool contains_point_interior(const RatPoint& v) const;
  bool contains_interior(const DegreePolytope& other) const;
  bool equals(const DegreePolytope& other) const {
    return contains(other) && other.contains(*this);
  }

  DegreePolytope minkowski_sum(const DegreePolytope& other) const;
  DegreePolytope translated(const RatPoint& shift) const;

 private:
  int dim_;
  std::vector<RatPoint> points_;
  std::set<RatPoint> seen_;
};

// max { eps >= 0 : v + eps*d in hull(points) }, or no value if v itself is
// not in the hull. An unbounded ray cannot occur for a finite point set.
// Exact simplex, Bland's rule.
struct MarginResult {
  bool feasible;
  Rational margin;
};
MarginResult hull_margin(const std::vector<RatPoint>& points, const RatPoint& v,
                         const RatPoint& direction);

}  // namespace hypertoric
