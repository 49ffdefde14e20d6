#include "mfa/fourier/metric_fourier.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "mfa/fourier/kernels.hpp"
#include "mfa/integral/quadrature.hpp"
#include "mfa/parallel.hpp"

namespace mfa {

namespace {

void require_family(const SelectionFamily& family) {
  if (family.empty()) throw std::invalid_argument("selection family is empty");
}

double family_tol(const SelectionFamily& family) { return family.selections.front().metric().dedup_tol; }

template <typename F>
PointSet collect(const SelectionFamily& family, F&& value) {
  require_family(family);
  std::vector<Point> points(family.size());
  parallel_for(family.size(), [&](std::size_t i) { points[i] = value(family.selections[i]); });
  return PointSet::from_coords(points.front().dim(),
                               [&] {
                                 std::vector<double> flat;
                                 for (const Point& p : points) flat.insert(flat.end(), p.coords().begin(), p.coords().end());
                                 return flat;
                               }(),
                               family_tol(family));
}

}  // namespace

Point partial_sum_of_chain(const ChainFunction& c, int n, double x) {
  const Partition& chi = c.partition();
  const auto& y = c.chain().values();
  Point sum = Point::zero(c.chain().dim());
  double upper = dirichlet_antiderivative(n, x - chi.node(0));
  for (std::size_t i = 0; i + 1 < chi.size(); ++i) {
    const double lower = dirichlet_antiderivative(n, x - chi.node(i + 1));
    Point term = y[i];
    term *= (upper - lower) / std::numbers::pi;
    sum += term;
    upper = lower;
  }
  return sum;
}

FamilyQuadrature::FamilyQuadrature(const SelectionFamily& family, int order) {
  require_family(family);
  dim_ = family.selections.front().base().chain().dim();
  dedup_tol_ = family_tol(family);
  tables_.resize(family.size());
  parallel_for(family.size(), [&](std::size_t s) {
    const MetricSelection& sel = family.selections[s];
    const Partition& chi = sel.base().partition();
    Table& t = tables_[s];
    const std::size_t count = chi.cells() * static_cast<std::size_t>(order);
    t.nodes.resize(count);
    t.weights.resize(count);
    t.values.reserve(count * dim_);
    for (std::size_t i = 0; i < chi.cells(); ++i) {
      const std::span<double> nodes(t.nodes.data() + i * order, order);
      const std::span<double> weights(t.weights.data() + i * order, order);
      gauss_legendre(order, chi.node(i), chi.node(i + 1), nodes, weights);
    }
    for (double node : t.nodes) {
      const Point v = sel(node);
      t.values.insert(t.values.end(), v.coords().begin(), v.coords().end());
    }
  });
}

Point FamilyQuadrature::partial_sum(std::size_t i, int n, double x) const {
  const Table& t = tables_.at(i);
  std::vector<double> acc(dim_, 0.0);
  for (std::size_t j = 0; j < t.nodes.size(); ++j) {
    const double w = t.weights[j] * dirichlet(n, x - t.nodes[j]);
    for (std::size_t c = 0; c < dim_; ++c) acc[c] += w * t.values[j * dim_ + c];
  }
  for (double& v : acc) v /= std::numbers::pi;
  return Point(std::move(acc));
}

std::string_view to_string(FourierMode m) {
  return m == FourierMode::chain_exact ? "chain_exact" : "continuation_quadrature";
}

FourierApproximant metric_fourier(const FamilyQuadrature& quadrature, int n, double x) {
  if (n < 1) throw std::invalid_argument("kernel order must be at least 1");
  std::vector<double> flat(quadrature.size() * quadrature.dim());
  parallel_for(quadrature.size(), [&](std::size_t i) {
    const Point p = quadrature.partial_sum(i, n, x);
    std::copy(p.coords().begin(), p.coords().end(), flat.begin() + static_cast<std::ptrdiff_t>(i * quadrature.dim()));
  });
  return FourierApproximant{x, n, PointSet::from_coords(quadrature.dim(), std::move(flat), quadrature.dedup_tol()),
                            quadrature.size()};
}

FourierApproximant metric_fourier(const SelectionFamily& family, int n, double x, FourierMode mode) {
  if (n < 1) throw std::invalid_argument("kernel order must be at least 1");
  if (mode == FourierMode::continuation_quadrature) return metric_fourier(FamilyQuadrature(family), n, x);
  PointSet values = collect(family, [&](const MetricSelection& s) { return partial_sum_of_chain(s.base(), n, x); });
  return FourierApproximant{x, n, std::move(values), family.size()};
}

PointSet limit_set_AF(const SelectionFamily& family, double x) {
  return collect(family, [&](const MetricSelection& s) {
    Point mid = s.left_limit(x);
    mid += s.right_limit(x);
    mid *= 0.5;
    return mid;
  });
}

PointSet left_limit_set(const SelectionFamily& family, double x) {
  return collect(family, [&](const MetricSelection& s) { return s.left_limit(x); });
}

PointSet right_limit_set(const SelectionFamily& family, double x) {
  return collect(family, [&](const MetricSelection& s) { return s.right_limit(x); });
}

}  // namespace mfa
