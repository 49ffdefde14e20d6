#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "mfa/geometry/convex_hull.hpp"
#include "mfa/geometry/metric.hpp"
#include "mfa/geometry/point_set.hpp"
#include "mfa/svf/partition.hpp"
#include "mfa/svf/selection.hpp"
#include "mfa/svf/set_valued_function.hpp"

namespace mfa {

// Real weight k on [a, b] with declared bounds on its variation and size.
struct WeightFunction {
  std::function<double(double)> eval;
  double variation = 0.0;  // V(k) on the domain
  double sup = 0.0;        // sup |k| on the domain
  std::vector<double> discontinuities;
  // Optional closed form of the integral of k over [u, w].
  std::function<double(double, double)> antiderivative_integral;

  double operator()(double x) const { return eval(x); }
  double integrate(double u, double w, double qtol = 1e-10) const;

  static WeightFunction constant(double c);
  // slope * x + intercept on [a, b].
  static WeightFunction linear(double slope, double intercept, double a, double b);
  // c0 + c1 * cos(x) on [a, b].
  static WeightFunction cosine(double c0, double c1, double a, double b);
};

enum class IntegralMethod { exact_chains, selection_family, aumann_convex };

std::string_view to_string(IntegralMethod m);

struct IntegralResult {
  PointSet value_set;
  IntegralMethod method = IntegralMethod::exact_chains;
  double partition_norm = 0.0;
};

// Left sums: (x_{i+1} - x_i) k(x_i) y_i summed over i < n, over all metric chains
// of (F(x_0), ..., F(x_{n-1})).
PointSet weighted_metric_riemann_sum(const SetValuedFunction& f, const WeightFunction& k, const Partition& chi,
                                     const Metric& m = {});

// Right sums: (x_{i+1} - x_i) k(x_{i+1}) y_{i+1} over all metric chains of
// (F(x_1), ..., F(x_n)).
PointSet right_weighted_metric_riemann_sum(const SetValuedFunction& f, const WeightFunction& k,
                                           const Partition& chi, const Metric& m = {});

// The same sums evaluated along each selection of a family, y_i = s(x_i).
PointSet weighted_metric_riemann_sum(const SelectionFamily& family, const WeightFunction& k, const Partition& chi);
PointSet right_weighted_metric_riemann_sum(const SelectionFamily& family, const WeightFunction& k,
                                           const Partition& chi);

// Integrals of k * s over the selections of the family, each s taken piecewise
// constant on its own partition.
IntegralResult weighted_metric_integral(const SelectionFamily& family, const WeightFunction& k, double qtol = 1e-10);

// Riemann approximation of the integral of k * co(F(x)), as a hull (d <= 2).
// Returns the hull vertices (interval end points when d = 1).
IntegralResult aumann_integral_convex(const SetValuedFunction& f, const WeightFunction& k, const Partition& chi);
ConvexHull aumann_hull(const SetValuedFunction& f, const WeightFunction& k, const Partition& chi);

struct InclusionReport {
  bool lower_ok = false;   // intersection of F(x) inside the normalized integral
  bool upper_ok = false;   // normalized integral inside co(union of F(x))
  double lower_margin = 0.0;  // largest distance from an intersection point to the integral
  double upper_margin = 0.0;  // largest distance from an integral point to the hull
  std::optional<PointSet> intersection;  // empty optional when the intersection is empty
  PointSet normalized;
  std::vector<Point> hull_vertices;

  bool ok() const { return lower_ok && upper_ok; }
};

// Checks intersection F(x) within (1 / int k) * integral within co(union F(x)),
// with intersection and union sampled on a uniform grid of grid_points abscissae
// plus the declared jumps. Requires k >= 0 with nonzero integral and d <= 2.
InclusionReport inclusion_check(const SetValuedFunction& f, const WeightFunction& k, const SelectionFamily& family,
                                double tol = 1e-6, std::size_t grid_points = 257, double qtol = 1e-10);

}  // namespace mfa
