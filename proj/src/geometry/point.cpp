#include "mfa/geometry/point.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace mfa {

namespace {

void check_coords(std::span<const double> c) {
  if (c.empty()) throw std::invalid_argument("point must have dimension >= 1");
  for (double v : c) {
    if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
  }
}

void check_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point dimension mismatch");
}

}  // namespace

std::string_view to_string(Norm norm) {
  switch (norm) {
    case Norm::l1: return "l1";
    case Norm::l2: return "l2";
    case Norm::linf: return "linf";
  }
  return "l2";
}

Norm parse_norm(std::string_view text) {
  if (text == "l1") return Norm::l1;
  if (text == "l2") return Norm::l2;
  if (text == "linf") return Norm::linf;
  throw std::invalid_argument("unknown norm '" + std::string(text) + "' (expected l1, l2 or linf)");
}

double norm_of(std::span<const double> v, Norm norm) {
  if (v.size() == 1) return std::abs(v[0]);
  double acc = 0.0;
  switch (norm) {
    case Norm::l1:
      for (double x : v) acc += std::abs(x);
      return acc;
    case Norm::l2:
      if (v.size() == 2) return std::hypot(v[0], v[1]);
      for (double x : v) acc += x * x;
      return std::sqrt(acc);
    case Norm::linf:
      for (double x : v) acc = std::max(acc, std::abs(x));
      return acc;
  }
  return acc;
}

double distance(std::span<const double> a, std::span<const double> b, Norm norm) {
  const std::size_t d = a.size();
  if (d == 1) return std::abs(a[0] - b[0]);
  double acc = 0.0;
  switch (norm) {
    case Norm::l1:
      for (std::size_t i = 0; i < d; ++i) acc += std::abs(a[i] - b[i]);
      return acc;
    case Norm::l2:
      if (d == 2) return std::hypot(a[0] - b[0], a[1] - b[1]);
      for (std::size_t i = 0; i < d; ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
      return std::sqrt(acc);
    case Norm::linf:
      for (std::size_t i = 0; i < d; ++i) acc = std::max(acc, std::abs(a[i] - b[i]));
      return acc;
  }
  return acc;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { check_coords(coords_); }

Point::Point(std::initializer_list<double> coords) : coords_(coords) { check_coords(coords_); }

Point::Point(std::span<const double> coords) : coords_(coords.begin(), coords.end()) {
  check_coords(coords_);
}

Point Point::zero(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("point must have dimension >= 1");
  return Point(std::vector<double>(dim, 0.0), Unchecked{});
}

Point& Point::operator+=(const Point& other) {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

double distance(const Point& a, const Point& b, Norm norm) {
  check_same_dim(a, b);
  return distance(a.coords(), b.coords(), norm);
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  return os << ')';
}

}  // namespace mfa
