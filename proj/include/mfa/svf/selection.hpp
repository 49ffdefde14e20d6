#pragma once

#include <string>
#include <vector>

#include "mfa/geometry/metric.hpp"
#include "mfa/svf/chain.hpp"
#include "mfa/svf/partition.hpp"
#include "mfa/svf/set_valued_function.hpp"

namespace mfa {

// Approximation of a metric selection by a greedy chain on a fine partition.
//
// At partition nodes the value is the chain value. Between nodes the value is
// the greedy continuation: the projection onto F(x) of the neighbouring node
// value on the seed side. This equals the value at x of the greedy chain on
// the partition refined by x, so it is exact wherever the selection follows a
// branch of F inside the cell.
class MetricSelection {
 public:
  MetricSelection(SetValuedFunction f, ChainFunction base, GraphPoint seed, int depth,
                  double cauchy_defect, Metric metric);

  const SetValuedFunction& function() const { return f_; }
  const ChainFunction& base() const { return base_; }
  const GraphPoint& seed() const { return seed_; }
  int depth() const { return depth_; }
  double cauchy_defect() const { return cauchy_defect_; }
  const Metric& metric() const { return metric_; }
  double a() const { return f_.a(); }
  double b() const { return f_.b(); }

  Point operator()(double x) const;

  // One-sided limits s(x - 0) and s(x + 0), probed at offsets h * 2^-j for the
  // mesh h and j up to limit_levels, with a linear extrapolation from the two
  // finest probes. At the end points the value itself is returned.
  Point left_limit(double x, int limit_levels = 20) const;
  Point right_limit(double x, int limit_levels = 20) const;

 private:
  Point one_sided(double x, double direction, int limit_levels) const;

  SetValuedFunction f_;
  ChainFunction base_;
  GraphPoint seed_;
  int depth_;
  double cauchy_defect_;
  Metric metric_;
};

MetricSelection approximate_selection(const SetValuedFunction& f, const GraphPoint& seed, int depth,
                                      const Partition& probe, const Metric& metric = {});

struct SelectionFamily {
  std::vector<MetricSelection> selections;
  std::string seed_grid;
  Partition probe;

  std::size_t size() const { return selections.size(); }
  bool empty() const { return selections.empty(); }
};

// Up to count points of the set, chosen by farthest-point sampling starting from
// the lexicographically smallest point. count == 0 returns every point.
std::vector<Point> sample_points(const PointSet& set, std::size_t count, Norm norm = Norm::l2);

// Seeds on a uniform grid of x_seeds abscissae plus all declared jumps, with
// y_seeds values sampled from each F(x) (0 means all points). Selections that
// agree on the probe grid within metric.dedup_tol are merged.
SelectionFamily selection_family(const SetValuedFunction& f, std::size_t x_seeds, std::size_t y_seeds,
                                 int depth, const Metric& metric = {});

// Every metric chain of (F(x_0), ..., F(x_n)) on chi, built by branching over all
// metric-pair successors from every graph point of chi. Meant for tiny
// instances; throws ChainExplosionError past metric.chain_limit.
SelectionFamily branching_family(const SetValuedFunction& f, const Partition& chi,
                                 const Metric& metric = {});

// Probe grid used for family deduplication and Cauchy defects.
Partition default_probe(const SetValuedFunction& f, int depth);

}  // namespace mfa
