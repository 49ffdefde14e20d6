#pragma once

#include <vector>

#include "mfa/geometry/metric.hpp"
#include "mfa/geometry/point.hpp"
#include "mfa/svf/partition.hpp"
#include "mfa/svf/set_valued_function.hpp"

namespace mfa {

// A point (x, y) of the graph of a set-valued function.
struct GraphPoint {
  double x = 0.0;
  Point y;
};

// One value per partition node.
class MetricChain {
 public:
  MetricChain(Partition partition, std::vector<Point> values);

  const Partition& partition() const { return partition_; }
  const std::vector<Point>& values() const { return values_; }
  const Point& value(std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  std::size_t dim() const { return values_.front().dim(); }

 private:
  Partition partition_;
  std::vector<Point> values_;
};

// Piecewise-constant extension of a chain: values[i] on [x_i, x_{i+1}) and the
// last value at b.
class ChainFunction {
 public:
  explicit ChainFunction(MetricChain chain) : chain_(std::move(chain)) {}

  const MetricChain& chain() const { return chain_; }
  const Partition& partition() const { return chain_.partition(); }
  double a() const { return partition().a(); }
  double b() const { return partition().b(); }

  const Point& operator()(double x) const { return chain_.value(partition().cell_index(x)); }

  // Value just left of x: the value of the cell ending at or containing x.
  const Point& left_value(double x) const;

 private:
  MetricChain chain_;
};

inline const Point& evaluate_chain_function(const ChainFunction& c, double x) { return c(x); }

// Greedy projection chain through seed. The seed abscissa must be a node of chi
// and the seed value must lie in F(seed.x) within metric.tie_tol. Values to the
// right are successive projections onto F(x_{i+1}), values to the left onto
// F(x_{i-1}); ties go to the lexicographically smallest witness.
MetricChain greedy_chain(const SetValuedFunction& f, const Partition& chi, const GraphPoint& seed,
                         const Metric& metric = {});

// Checks node membership and the consecutive metric-pair property.
bool is_metric_chain(const MetricChain& chain, const SetValuedFunction& f, const Metric& metric = {});

// Cumulative variation of the chain along its nodes: entry i is the sum of
// |y_j - y_{j-1}| for j <= i.
std::vector<double> chain_cumulative_variation(const MetricChain& chain, Norm norm = Norm::l2);

}  // namespace mfa
