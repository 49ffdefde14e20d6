#include "mfa/svf/chain.hpp"

#include <stdexcept>

#include "mfa/geometry/operations.hpp"

namespace mfa {

MetricChain::MetricChain(Partition partition, std::vector<Point> values)
    : partition_(std::move(partition)), values_(std::move(values)) {
  if (values_.size() != partition_.size()) throw std::invalid_argument("chain needs one value per node");
  for (const Point& v : values_) {
    if (v.dim() != values_.front().dim() || v.empty()) throw std::invalid_argument("chain values differ in dimension");
  }
}

const Point& ChainFunction::left_value(double x) const {
  const std::size_t i = partition().cell_index(x);
  if (i == 0) return chain_.value(0);
  if (partition().node(i) == x) return chain_.value(i - 1);
  return chain_.value(i);
}

MetricChain greedy_chain(const SetValuedFunction& f, const Partition& chi, const GraphPoint& seed,
                         const Metric& metric) {
  if (chi.a() != f.a() || chi.b() != f.b()) throw std::invalid_argument("partition and function domains differ");
  const auto k = chi.node_index(seed.x);
  if (!k) throw std::invalid_argument("seed abscissa is not a partition node");
  const PointSet at_seed = f(seed.x);
  if (seed.y.dim() != at_seed.dim()) throw std::invalid_argument("seed dimension mismatch");
  const Nearest hit = at_seed.nearest(seed.y, metric);
  if (hit.distance > metric.tie_tol) throw std::invalid_argument("seed value does not belong to F(seed.x)");

  std::vector<Point> values(chi.size());
  values[*k] = at_seed.point(hit.indices.front());
  for (std::size_t i = *k + 1; i < chi.size(); ++i) {
    const PointSet s = f(chi.node(i));
    values[i] = s.point(s.project_index(values[i - 1].coords(), metric));
  }
  for (std::size_t i = *k; i-- > 0;) {
    const PointSet s = f(chi.node(i));
    values[i] = s.point(s.project_index(values[i + 1].coords(), metric));
  }
  return MetricChain(chi, std::move(values));
}

bool is_metric_chain(const MetricChain& chain, const SetValuedFunction& f, const Metric& metric) {
  const Partition& chi = chain.partition();
  PointSet prev = f(chi.node(0));
  if (!prev.contains(chain.value(0), std::max(prev.dedup_tol(), metric.dedup_tol))) return false;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    PointSet cur = f(chi.node(i));
    if (!cur.contains(chain.value(i), std::max(cur.dedup_tol(), metric.dedup_tol))) return false;
    if (!is_metric_pair(chain.value(i - 1), chain.value(i), prev, cur, metric)) return false;
    prev = std::move(cur);
  }
  return true;
}

std::vector<double> chain_cumulative_variation(const MetricChain& chain, Norm norm) {
  std::vector<double> v(chain.size(), 0.0);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    v[i] = v[i - 1] + distance(chain.value(i), chain.value(i - 1), norm);
  }
  return v;
}

}  // namespace mfa
