#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "mfa/geometry/metric.hpp"
#include "mfa/geometry/point.hpp"

namespace mfa {

namespace detail {
struct PointSetData;
}

// Nearest-point query result: the minimum distance and the indices of every
// stored point within tie_tol of it, in ascending (lexicographic) order.
struct Nearest {
  double distance = 0.0;
  std::vector<std::size_t> indices;
};

// Nonempty finite subset of R^d standing in for a compact set.
//
// Points are stored sorted lexicographically, so index order equals
// lexicographic order and "first witness" means "lexicographically smallest".
// Points whose max-coordinate distance is below dedup_tol are merged, keeping
// the smallest. Large sets get a k-d tree for nearest-point queries.
// The storage is immutable and shared, so copies are cheap.
class PointSet {
 public:
  explicit PointSet(std::span<const Point> points, double dedup_tol = kDefaultDedupTol);
  PointSet(std::initializer_list<Point> points, double dedup_tol = kDefaultDedupTol);
  explicit PointSet(const std::vector<Point>& points, double dedup_tol = kDefaultDedupTol)
      : PointSet(std::span<const Point>(points), dedup_tol) {}

  // Flat row-major coordinates, dim values per point.
  static PointSet from_coords(std::size_t dim, std::vector<double> coords,
                              double dedup_tol = kDefaultDedupTol);
  static PointSet scalars(std::span<const double> values, double dedup_tol = kDefaultDedupTol);
  static PointSet scalars(std::initializer_list<double> values,
                          double dedup_tol = kDefaultDedupTol);
  static PointSet singleton(const Point& p);

  std::size_t size() const;
  std::size_t dim() const;
  double dedup_tol() const;

  std::span<const double> coords(std::size_t i) const;
  Point point(std::size_t i) const;
  std::vector<Point> points() const;
  std::span<const double> flat() const;

  // Exact minimum distance from q to the set.
  double distance_to(std::span<const double> q, Norm norm) const;
  double distance_to(const Point& q, Norm norm = Norm::l2) const;

  // All minimizers within tie_tol of the minimum distance.
  Nearest nearest(std::span<const double> q, Norm norm, double tie_tol) const;
  Nearest nearest(const Point& q, const Metric& m) const;

  // Index of the lexicographically smallest minimizer.
  std::size_t project_index(std::span<const double> q, const Metric& m) const;

  // True when some stored point is within tol of p in max-coordinate distance.
  bool contains(const Point& p, double tol) const;

  PointSet translated(const Point& v) const;
  PointSet scaled(double s) const;

  // Identity of the shared storage; equal ids imply equal sets.
  const void* id() const { return data_.get(); }

 private:
  explicit PointSet(std::shared_ptr<const detail::PointSetData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::PointSetData> data_;
};

PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_union(std::span<const PointSet> sets);

// Set equality up to tol: every point of each set lies within tol (max-coordinate
// distance) of a point of the other.
bool approx_equal(const PointSet& a, const PointSet& b, double tol);

}  // namespace mfa
