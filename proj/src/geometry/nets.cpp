#include "mfa/geometry/nets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace mfa {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("net parameter eps must be positive");
}

}  // namespace

PointSet disc_net(const Point& center, double radius, double eps) {
  check_eps(eps);
  if (center.dim() != 2) throw std::invalid_argument("disc nets live in the plane");
  if (!(radius >= 0.0)) throw std::invalid_argument("disc radius must be nonnegative");
  const double cx = center[0], cy = center[1];
  if (radius == 0.0) return PointSet::singleton(center);

  const double s = 1.2 * eps;
  const auto steps = static_cast<long>(std::ceil((radius + s) / s));
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(4.0 * (radius / s + 2) * (radius / s + 2)));
  for (long i = -steps; i <= steps; ++i) {
    for (long j = -steps; j <= steps; ++j) {
      double x = i * s, y = j * s;
      const double r = std::hypot(x, y);
      if (r > radius + s) continue;
      if (r > radius) {
        x *= radius / r;
        y *= radius / r;
      }
      c.push_back(cx + x);
      c.push_back(cy + y);
    }
  }
  const auto ring = static_cast<long>(std::ceil(2 * std::numbers::pi * radius / (0.3 * eps)));
  for (long k = 0; k < ring; ++k) {
    const double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ring);
    c.push_back(cx + radius * std::cos(a));
    c.push_back(cy + radius * std::sin(a));
  }
  return PointSet::from_coords(2, std::move(c));
}

PointSet segment_net(const Point& p, const Point& q, double eps) {
  check_eps(eps);
  if (p.dim() != q.dim()) throw std::invalid_argument("segment endpoints differ in dimension");
  const double len = distance(p, q, Norm::l2);
  const auto n = std::max<long>(1, static_cast<long>(std::ceil(len / (2 * eps))));
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(n + 1) * p.dim());
  for (long k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n);
    for (std::size_t a = 0; a < p.dim(); ++a) c.push_back((1 - t) * p[a] + t * q[a]);
  }
  return PointSet::from_coords(p.dim(), std::move(c));
}

PointSet circle_net(const Point& center, double radius, double eps) {
  check_eps(eps);
  if (center.dim() != 2) throw std::invalid_argument("circle nets live in the plane");
  const auto n = std::max<long>(3, static_cast<long>(std::ceil(2 * std::numbers::pi * radius / (2 * eps))));
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(2 * n));
  for (long k = 0; k < n; ++k) {
    const double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    c.push_back(center[0] + radius * std::cos(a));
    c.push_back(center[1] + radius * std::sin(a));
  }
  return PointSet::from_coords(2, std::move(c));
}

}  // namespace mfa
