#include "mfa/geometry/convex_hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mfa {

namespace {

struct P2 {
  double x, y;
};

double cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; returns counter-clockwise corners, no collinear points.
std::vector<P2> monotone_chain(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const P2& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Point> to_points(const std::vector<P2>& v) {
  std::vector<Point> out;
  out.reserve(v.size());
  for (const P2& p : v) out.push_back(Point{p.x, p.y});
  return out;
}

std::vector<P2> to_p2(const std::vector<Point>& v) {
  std::vector<P2> out;
  out.reserve(v.size());
  for (const Point& p : v) out.push_back({p[0], p[1]});
  return out;
}

double segment_distance(const P2& p, const P2& a, const P2& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

// Edge direction angle measured so that the counter-clockwise walk from the
// lexicographically smallest corner is increasing.
double edge_angle(const P2& a, const P2& b) {
  double ang = std::atan2(b.y - a.y, b.x - a.x);
  if (ang < -std::numbers::pi / 2 - 1e-15) ang += 2 * std::numbers::pi;
  return ang;
}

}  // namespace

ConvexHull::ConvexHull(const PointSet& set) : dim_(set.dim()) {
  if (dim_ == 1) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < set.size(); ++i) {
      lo = std::min(lo, set.coords(i)[0]);
      hi = std::max(hi, set.coords(i)[0]);
    }
    vertices_.push_back(Point{lo});
    if (hi > lo) vertices_.push_back(Point{hi});
    return;
  }
  if (dim_ != 2) throw std::invalid_argument("convex hull is only supported in dimension 1 or 2");
  std::vector<P2> pts;
  pts.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) pts.push_back({set.coords(i)[0], set.coords(i)[1]});
  vertices_ = to_points(monotone_chain(std::move(pts)));
}

double ConvexHull::distance(const Point& p) const {
  if (p.dim() != dim_) throw std::invalid_argument("point/hull dimension mismatch");
  if (dim_ == 1) {
    const double lo = vertices_.front()[0], hi = vertices_.back()[0];
    return std::max({0.0, lo - p[0], p[0] - hi});
  }
  const P2 q{p[0], p[1]};
  const auto v = to_p2(vertices_);
  if (v.size() == 1) return std::hypot(q.x - v[0].x, q.y - v[0].y);
  if (v.size() == 2) return segment_distance(q, v[0], v[1]);
  bool inside = true;
  for (std::size_t i = 0; i < v.size() && inside; ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], q) < 0) inside = false;
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) best = std::min(best, segment_distance(q, v[i], v[(i + 1) % v.size()]));
  return best;
}

ConvexHull ConvexHull::scaled(double s) const {
  std::vector<Point> v;
  v.reserve(vertices_.size());
  for (const Point& p : vertices_) v.push_back(p * s);
  return ConvexHull(PointSet(v));
}

ConvexHull minkowski_sum(const ConvexHull& a, const ConvexHull& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("hull dimension mismatch");
  if (a.dim_ == 1) {
    const double lo = a.vertices_.front()[0] + b.vertices_.front()[0];
    const double hi = a.vertices_.back()[0] + b.vertices_.back()[0];
    return ConvexHull(PointSet::scalars({lo, hi}));
  }
  const auto va = to_p2(a.vertices_);
  const auto vb = to_p2(b.vertices_);
  std::vector<P2> out;
  if (va.size() < 3 || vb.size() < 3) {
    for (const P2& p : va)
      for (const P2& q : vb) out.push_back({p.x + q.x, p.y + q.y});
    return ConvexHull(2, to_points(monotone_chain(std::move(out))));
  }
  // Merge the edge sequences by direction angle.
  const std::size_t n = va.size(), m = vb.size();
  std::size_t i = 0, j = 0;
  out.reserve(n + m);
  while (i < n || j < m) {
    out.push_back({va[i % n].x + vb[j % m].x, va[i % n].y + vb[j % m].y});
    const double ai = i < n ? edge_angle(va[i], va[(i + 1) % n]) : std::numeric_limits<double>::infinity();
    const double aj = j < m ? edge_angle(vb[j], vb[(j + 1) % m]) : std::numeric_limits<double>::infinity();
    if (ai <= aj) ++i;
    if (aj <= ai) ++j;
  }
  return ConvexHull(2, to_points(monotone_chain(std::move(out))));
}

}  // namespace mfa
