#include "mfa/geometry/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "geometry/kd_tree.hpp"

namespace mfa {

namespace detail {

struct PointSetData {
  std::size_t dim = 0;
  double dedup_tol = 0.0;
  std::vector<double> coords;
  KdTree tree;

  std::size_t size() const { return coords.size() / dim; }
  std::span<const double> at(std::size_t i) const { return {coords.data() + i * dim, dim}; }
};

}  // namespace detail

namespace {

constexpr std::size_t kTreeThreshold = 48;

using Data = detail::PointSetData;

bool lex_less(const double* a, const double* b, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k) {
    if (a[k] < b[k]) return true;
    if (a[k] > b[k]) return false;
  }
  return false;
}

bool close_linf(const double* a, const double* b, std::size_t d, double tol) {
  for (std::size_t k = 0; k < d; ++k) {
    if (std::abs(a[k] - b[k]) > tol) return false;
  }
  return true;
}

// Returns true when p is within tol of one of the kept points. Kept points are
// sorted lexicographically; candidates have a first coordinate in
// [p0 - tol, p0 + tol], and inside each run of equal first coordinates the
// second coordinate is sorted, which allows binary search.
bool near_kept(const std::vector<double>& kept, std::size_t d, const double* p, double tol) {
  const std::size_t n = kept.size() / d;
  if (n == 0) return false;
  auto first = [&](std::size_t i) { return kept[i * d]; };
  std::size_t end = n;
  while (end > 0 && first(end - 1) >= p[0] - tol) {
    const double key = first(end - 1);
    // Start of the run of points sharing this first coordinate.
    std::size_t lo = 0, hi = end - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (first(mid) < key) lo = mid + 1; else hi = mid;
    }
    const std::size_t run_begin = lo;
    if (std::abs(key - p[0]) <= tol) {
      std::size_t k = run_begin;
      if (d >= 2) {
        std::size_t a = run_begin, b = end;
        while (a < b) {
          const std::size_t mid = (a + b) / 2;
          if (kept[mid * d + 1] < p[1] - tol) a = mid + 1; else b = mid;
        }
        k = a;
      }
      for (; k < end; ++k) {
        if (d >= 2 && kept[k * d + 1] > p[1] + tol) break;
        if (close_linf(kept.data() + k * d, p, d, tol)) return true;
      }
    }
    end = run_begin;
  }
  return false;
}

std::shared_ptr<const Data> make_data(std::size_t dim, std::vector<double> coords, double tol) {
  if (dim == 0) throw std::invalid_argument("point set dimension must be >= 1");
  if (coords.empty()) throw std::invalid_argument("point set must be nonempty");
  if (coords.size() % dim != 0) throw std::invalid_argument("coordinate count not a multiple of dim");
  if (!(tol >= 0.0)) throw std::invalid_argument("dedup_tol must be nonnegative");
  for (double v : coords) {
    if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
  }
  const std::size_t n = coords.size() / dim;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  bool sorted = true;
  for (std::size_t i = 1; i < n && sorted; ++i) {
    if (lex_less(&coords[i * dim], &coords[(i - 1) * dim], dim)) sorted = false;
  }
  if (!sorted) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return lex_less(&coords[a * dim], &coords[b * dim], dim);
    });
  }

  auto data = std::make_shared<Data>();
  data->dim = dim;
  data->dedup_tol = tol;
  data->coords.reserve(coords.size());
  for (std::size_t i : order) {
    const double* p = &coords[i * dim];
    const std::size_t kept_n = data->coords.size() / dim;
    if (kept_n > 0) {
      const double* last = data->coords.data() + (kept_n - 1) * dim;
      if (std::equal(p, p + dim, last)) continue;
      if (tol > 0.0 && near_kept(data->coords, dim, p, tol)) continue;
    }
    data->coords.insert(data->coords.end(), p, p + dim);
  }
  if (data->size() >= kTreeThreshold) data->tree = detail::KdTree(data->coords, dim);
  return data;
}

std::vector<double> flatten(std::span<const Point> pts) {
  if (pts.empty()) throw std::invalid_argument("point set must be nonempty");
  const std::size_t d = pts.front().dim();
  std::vector<double> flat;
  flat.reserve(pts.size() * d);
  for (const Point& p : pts) {
    if (p.dim() != d) throw std::invalid_argument("point set dimension mismatch");
    if (p.empty()) throw std::invalid_argument("point must have dimension >= 1");
    flat.insert(flat.end(), p.coords().begin(), p.coords().end());
  }
  return flat;
}

}  // namespace

PointSet::PointSet(std::span<const Point> points, double dedup_tol)
    : data_(make_data(points.empty() ? 1 : points.front().dim(), flatten(points), dedup_tol)) {}

PointSet::PointSet(std::initializer_list<Point> points, double dedup_tol)
    : PointSet(std::span<const Point>(points.begin(), points.size()), dedup_tol) {}

PointSet PointSet::from_coords(std::size_t dim, std::vector<double> coords, double dedup_tol) {
  return PointSet(make_data(dim, std::move(coords), dedup_tol));
}

PointSet PointSet::scalars(std::span<const double> values, double dedup_tol) {
  return from_coords(1, std::vector<double>(values.begin(), values.end()), dedup_tol);
}

PointSet PointSet::scalars(std::initializer_list<double> values, double dedup_tol) {
  return from_coords(1, std::vector<double>(values), dedup_tol);
}

PointSet PointSet::singleton(const Point& p) {
  return from_coords(p.dim(), std::vector<double>(p.coords().begin(), p.coords().end()));
}

std::size_t PointSet::size() const { return data_->size(); }
std::size_t PointSet::dim() const { return data_->dim; }
double PointSet::dedup_tol() const { return data_->dedup_tol; }
std::span<const double> PointSet::coords(std::size_t i) const { return data_->at(i); }
Point PointSet::point(std::size_t i) const { return Point(data_->at(i)); }
std::span<const double> PointSet::flat() const { return data_->coords; }

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

double PointSet::distance_to(std::span<const double> q, Norm norm) const {
  if (q.size() != dim()) throw std::invalid_argument("dimension mismatch in distance query");
  if (data_->tree.built()) return data_->tree.nearest_distance(q, norm);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) best = std::min(best, distance(data_->at(i), q, norm));
  return best;
}

double PointSet::distance_to(const Point& q, Norm norm) const { return distance_to(q.coords(), norm); }

Nearest PointSet::nearest(std::span<const double> q, Norm norm, double tie_tol) const {
  Nearest out;
  out.distance = distance_to(q, norm);
  const double radius = out.distance + tie_tol;
  if (data_->tree.built()) {
    data_->tree.within(q, radius, norm, out.indices);
    std::sort(out.indices.begin(), out.indices.end());
  } else {
    for (std::size_t i = 0; i < size(); ++i) {
      if (distance(data_->at(i), q, norm) <= radius) out.indices.push_back(i);
    }
  }
  return out;
}

Nearest PointSet::nearest(const Point& q, const Metric& m) const {
  return nearest(q.coords(), m.norm, m.tie_tol);
}

std::size_t PointSet::project_index(std::span<const double> q, const Metric& m) const {
  return nearest(q, m.norm, m.tie_tol).indices.front();
}

bool PointSet::contains(const Point& p, double tol) const {
  if (p.dim() != dim()) throw std::invalid_argument("dimension mismatch in membership query");
  return distance_to(p.coords(), Norm::linf) <= tol;
}

PointSet PointSet::translated(const Point& v) const {
  if (v.dim() != dim()) throw std::invalid_argument("dimension mismatch in translation");
  std::vector<double> c = data_->coords;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += v[i % dim()];
  return from_coords(dim(), std::move(c), dedup_tol());
}

PointSet PointSet::scaled(double s) const {
  std::vector<double> c = data_->coords;
  for (double& x : c) x *= s;
  return from_coords(dim(), std::move(c), dedup_tol());
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  const PointSet sets[] = {a, b};
  return set_union(sets);
}

PointSet set_union(std::span<const PointSet> sets) {
  if (sets.empty()) throw std::invalid_argument("union of zero sets");
  const std::size_t d = sets.front().dim();
  double tol = 0.0;
  std::vector<double> c;
  for (const PointSet& s : sets) {
    if (s.dim() != d) throw std::invalid_argument("point set dimension mismatch");
    tol = std::max(tol, s.dedup_tol());
    c.insert(c.end(), s.flat().begin(), s.flat().end());
  }
  return PointSet::from_coords(d, std::move(c), tol);
}

bool approx_equal(const PointSet& a, const PointSet& b, double tol) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.distance_to(a.coords(i), Norm::linf) > tol) return false;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a.distance_to(b.coords(i), Norm::linf) > tol) return false;
  }
  return true;
}

}  // namespace mfa
