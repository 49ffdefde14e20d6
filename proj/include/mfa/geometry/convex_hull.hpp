#pragma once

#include <vector>

#include "mfa/geometry/point.hpp"
#include "mfa/geometry/point_set.hpp"

namespace mfa {

// Convex hull of a finite set in R^1 or R^2.
//
// In R^1 the vertices are the interval endpoints (one vertex if degenerate).
// In R^2 they are the hull corners in counter-clockwise order starting from the
// lexicographically smallest, with collinear points removed.
class ConvexHull {
 public:
  explicit ConvexHull(const PointSet& set);

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  PointSet vertex_set() const { return PointSet(vertices_); }

  // Euclidean distance from p to the hull; zero inside.
  double distance(const Point& p) const;
  bool contains(const Point& p, double tol = 0.0) const { return distance(p) <= tol; }

  ConvexHull scaled(double s) const;

  friend ConvexHull minkowski_sum(const ConvexHull& a, const ConvexHull& b);

 private:
  ConvexHull(std::size_t dim, std::vector<Point> vertices) : dim_(dim), vertices_(std::move(vertices)) {}

  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
};

inline ConvexHull convex_hull(const PointSet& set) { return ConvexHull(set); }

ConvexHull minkowski_sum(const ConvexHull& a, const ConvexHull& b);

}  // namespace mfa
