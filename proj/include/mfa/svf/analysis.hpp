#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mfa/geometry/metric.hpp"
#include "mfa/svf/chain.hpp"
#include "mfa/svf/partition.hpp"
#include "mfa/svf/set_valued_function.hpp"

namespace mfa {

// A map from [a, b] into some metric space, known only through the distance
// between its values at two abscissae. Scalar paths also keep their values so
// that one-sided limits can be extrapolated.
class MetricPath {
 public:
  using Distance = std::function<double(double, double)>;

  MetricPath(double a, double b, Distance dist, std::vector<double> breakpoints = {});

  static MetricPath scalar(std::function<double(double)> g, double a, double b,
                           std::vector<double> breakpoints = {});
  static MetricPath of_points(std::function<Point(double)> g, double a, double b, Norm norm = Norm::l2,
                              std::vector<double> breakpoints = {});
  // Distances are Hausdorff distances between values.
  static MetricPath of_svf(const SetValuedFunction& f, const Metric& m = {});
  static MetricPath of_chain(const ChainFunction& c, Norm norm = Norm::l2);

  double a() const { return a_; }
  double b() const { return b_; }
  double distance(double x1, double x2) const { return dist_(x1, x2); }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::function<double(double)>* scalar_values() const { return values_ ? &*values_ : nullptr; }

 private:
  double a_;
  double b_;
  Distance dist_;
  std::vector<double> breakpoints_;
  std::optional<std::function<double(double)>> values_;
};

// Sum of distances between consecutive node values.
double variation_on_partition(const MetricPath& g, const Partition& chi);

struct VariationEstimate {
  double value = 0.0;
  bool converged = false;
};

// Variation on dyadic partitions (plus breakpoints and forced nodes) of
// increasing level up to depth; converged when two successive levels differ by
// less than vtol. A lower bound for the total variation in general.
VariationEstimate total_variation(const MetricPath& g, int depth, std::span<const double> forced = {},
                                  double vtol = 1e-9);

// Cumulative variation along the nodes of chi.
std::vector<std::pair<double, double>> variation_function_samples(const MetricPath& g, const Partition& chi);

struct LocalModuli {
  double two_sided = 0.0;    // sup over x1, x2 in [x - d/2, x + d/2]
  double left = 0.0;         // sup over t in [x - d, x] of rho(g(x), g(t))
  double right = 0.0;        // sup over t in [x, x + d] of rho(g(x), g(t))
  double left_quasi = 0.0;   // sup over t in [x - d, x) of rho(g(x - 0), g(t))
  double right_quasi = 0.0;  // sup over t in (x, x + d] of rho(g(x + 0), g(t))
};

struct ModuliOptions {
  int uniform_probes = 128;    // evenly spaced probes per window
  int geometric_levels = 20;   // probes at offsets d * 2^-j, j = 0..levels
};

// Suprema over probe grids. One-sided limits of scalar paths are extrapolated
// linearly from the two finest geometric probes; other paths use the finest
// probe. Windows are clipped to [a, b].
LocalModuli local_moduli(const MetricPath& g, double x, double delta, const ModuliOptions& opts = {});

// A non-decreasing real function with known one-sided limits, such as an
// exactly computed variation function.
struct MonotoneFunction {
  double a = 0.0;
  double b = 0.0;
  std::function<double(double)> value;
  std::function<double(double)> left_limit;
  std::function<double(double)> right_limit;
};

// Exact moduli of a non-decreasing function (suprema are attained at window ends).
LocalModuli monotone_moduli(const MonotoneFunction& v, double x, double delta);

// Exact moduli of a chain function.
LocalModuli chain_moduli(const ChainFunction& c, double x, double delta, Norm norm = Norm::l2);

// Variation function of a chain function. Its right limit at x is taken at the
// first node strictly right of x, the finest right limit the partition resolves.
MonotoneFunction chain_variation_function(const ChainFunction& c, Norm norm = Norm::l2);

}  // namespace mfa
