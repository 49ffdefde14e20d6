#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "mfa/geometry/metric.hpp"

namespace mfa {

// A point of R^d with d >= 1 and finite coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);

  static Point zero(std::size_t dim);

  std::size_t dim() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  double norm(Norm n = Norm::l2) const { return norm_of(coords_, n); }

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(double s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

 private:
  struct Unchecked {};
  Point(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}

  std::vector<double> coords_;
};

double distance(const Point& a, const Point& b, Norm norm = Norm::l2);

// Largest coordinate difference; used for tolerance comparisons that must not
// depend on the selected norm.
double max_abs_diff(std::span<const double> a, std::span<const double> b);

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace mfa
