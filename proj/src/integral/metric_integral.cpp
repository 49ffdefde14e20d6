#include "mfa/integral/metric_integral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mfa/geometry/operations.hpp"
#include "mfa/integral/quadrature.hpp"
#include "mfa/parallel.hpp"

namespace mfa {

namespace {

// Integral of |sin| from 0 to u; odd in u.
double abs_sin_integral(double u) {
  const double s = u < 0 ? -1.0 : 1.0;
  u = std::abs(u);
  const double periods = std::floor(u / std::numbers::pi);
  const double r = u - periods * std::numbers::pi;
  return s * (2.0 * periods + 1.0 - std::cos(r));
}

void require_domain(const SetValuedFunction& f, const Partition& chi) {
  if (chi.a() != f.a() || chi.b() != f.b()) throw std::invalid_argument("partition and function domains differ");
}

PointSet sums_over_family(const SelectionFamily& family, const WeightFunction& k, const Partition& chi,
                          bool right) {
  if (family.empty()) throw std::invalid_argument("selection family is empty");
  const std::size_t d = family.selections.front().base().chain().dim();
  const std::size_t n = chi.cells();
  std::vector<double> lambda(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = chi.node(i + 1) - chi.node(i);
    lambda[i] = h * k(chi.node(right ? i + 1 : i));
  }
  std::vector<double> sums(family.size() * d, 0.0);
  parallel_for(family.size(), [&](std::size_t s) {
    const MetricSelection& sel = family.selections[s];
    for (std::size_t i = 0; i < n; ++i) {
      const Point y = sel(chi.node(right ? i + 1 : i));
      for (std::size_t c = 0; c < d; ++c) sums[s * d + c] += lambda[i] * y[c];
    }
  });
  return PointSet::from_coords(d, std::move(sums), family.selections.front().metric().dedup_tol);
}

PointSet exact_sums(const SetValuedFunction& f, const WeightFunction& k, const Partition& chi, const Metric& m,
                    bool right) {
  require_domain(f, chi);
  const std::size_t n = chi.cells();
  std::vector<PointSet> sets;
  std::vector<double> lambda;
  sets.reserve(n);
  lambda.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = chi.node(right ? i + 1 : i);
    sets.push_back(f(x));
    lambda.push_back((chi.node(i + 1) - chi.node(i)) * k(x));
  }
  return metric_linear_combination(lambda, sets, m);
}

}  // namespace

double WeightFunction::integrate(double u, double w, double qtol) const {
  if (antiderivative_integral) return antiderivative_integral(u, w);
  std::vector<double> cuts{u};
  for (double c : discontinuities) {
    if (c > u && c < w) cuts.push_back(c);
  }
  cuts.push_back(w);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) total += adaptive_simpson(eval, cuts[i - 1], cuts[i], qtol);
  return total;
}

WeightFunction WeightFunction::constant(double c) {
  WeightFunction k;
  k.eval = [c](double) { return c; };
  k.variation = 0.0;
  k.sup = std::abs(c);
  k.antiderivative_integral = [c](double u, double w) { return c * (w - u); };
  return k;
}

WeightFunction WeightFunction::linear(double slope, double intercept, double a, double b) {
  WeightFunction k;
  k.eval = [=](double x) { return slope * x + intercept; };
  k.variation = std::abs(slope) * (b - a);
  k.sup = std::max(std::abs(slope * a + intercept), std::abs(slope * b + intercept));
  k.antiderivative_integral = [=](double u, double w) { return 0.5 * slope * (w * w - u * u) + intercept * (w - u); };
  return k;
}

WeightFunction WeightFunction::cosine(double c0, double c1, double a, double b) {
  WeightFunction k;
  k.eval = [=](double x) { return c0 + c1 * std::cos(x); };
  k.variation = std::abs(c1) * (abs_sin_integral(b) - abs_sin_integral(a));
  double sup = std::max(std::abs(c0 + c1 * std::cos(a)), std::abs(c0 + c1 * std::cos(b)));
  for (double m = std::ceil(a / std::numbers::pi); m * std::numbers::pi <= b; m += 1.0) {
    sup = std::max(sup, std::abs(c0 + c1 * std::cos(m * std::numbers::pi)));
  }
  k.sup = sup;
  k.antiderivative_integral = [=](double u, double w) { return c0 * (w - u) + c1 * (std::sin(w) - std::sin(u)); };
  return k;
}

std::string_view to_string(IntegralMethod m) {
  switch (m) {
    case IntegralMethod::exact_chains: return "exact_chains";
    case IntegralMethod::selection_family: return "selection_family";
    case IntegralMethod::aumann_convex: return "aumann_convex";
  }
  return "exact_chains";
}

PointSet weighted_metric_riemann_sum(const SetValuedFunction& f, const WeightFunction& k, const Partition& chi,
                                     const Metric& m) {
  return exact_sums(f, k, chi, m, false);
}

PointSet right_weighted_metric_riemann_sum(const SetValuedFunction& f, const WeightFunction& k,
                                           const Partition& chi, const Metric& m) {
  return exact_sums(f, k, chi, m, true);
}

PointSet weighted_metric_riemann_sum(const SelectionFamily& family, const WeightFunction& k, const Partition& chi) {
  return sums_over_family(family, k, chi, false);
}

PointSet right_weighted_metric_riemann_sum(const SelectionFamily& family, const WeightFunction& k,
                                           const Partition& chi) {
  return sums_over_family(family, k, chi, true);
}

IntegralResult weighted_metric_integral(const SelectionFamily& family, const WeightFunction& k, double qtol) {
  if (family.empty()) throw std::invalid_argument("selection family is empty");
  const std::size_t d = family.selections.front().base().chain().dim();
  std::vector<double> sums(family.size() * d, 0.0);
  parallel_for(family.size(), [&](std::size_t s) {
    const MetricChain& c = family.selections[s].base().chain();
    const Partition& chi = c.partition();
    for (std::size_t i = 0; i + 1 < chi.size(); ++i) {
      const double w = k.integrate(chi.node(i), chi.node(i + 1), qtol);
      for (std::size_t j = 0; j < d; ++j) sums[s * d + j] += w * c.value(i)[j];
    }
  });
  double norm = 0.0;
  for (const auto& s : family.selections) norm = std::max(norm, s.base().partition().norm());
  return IntegralResult{PointSet::from_coords(d, std::move(sums), family.selections.front().metric().dedup_tol),
                        IntegralMethod::selection_family, norm};
}

ConvexHull aumann_hull(const SetValuedFunction& f, const WeightFunction& k, const Partition& chi) {
  require_domain(f, chi);
  std::optional<ConvexHull> acc;
  for (std::size_t i = 0; i + 1 < chi.size(); ++i) {
    const double x = chi.node(i);
    const ConvexHull term = ConvexHull(f(x)).scaled((chi.node(i + 1) - x) * k(x));
    acc = acc ? minkowski_sum(*acc, term) : term;
  }
  return *acc;
}

IntegralResult aumann_integral_convex(const SetValuedFunction& f, const WeightFunction& k, const Partition& chi) {
  return IntegralResult{aumann_hull(f, k, chi).vertex_set(), IntegralMethod::aumann_convex, chi.norm()};
}

InclusionReport inclusion_check(const SetValuedFunction& f, const WeightFunction& k, const SelectionFamily& family,
                                double tol, std::size_t grid_points, double qtol) {
  const double mass = k.integrate(f.a(), f.b(), qtol);
  if (mass == 0.0) throw std::invalid_argument("the weight must have a nonzero integral");

  const Partition grid = Partition::uniform(f.a(), f.b(), std::max<std::size_t>(grid_points, 2) - 1)
                             .with_nodes(f.jump_points());
  std::vector<PointSet> samples;
  samples.reserve(grid.size());
  for (double x : grid.nodes()) samples.push_back(f(x));

  std::vector<Point> common;
  const PointSet& first = samples.front();
  for (std::size_t i = 0; i < first.size(); ++i) {
    const Point p = first.point(i);
    const bool everywhere = std::all_of(samples.begin(), samples.end(), [&](const PointSet& s) {
      return s.contains(p, std::max(s.dedup_tol(), first.dedup_tol()));
    });
    if (everywhere) common.push_back(p);
  }

  InclusionReport r{false, false, 0.0, 0.0, std::nullopt,
                    weighted_metric_integral(family, k, qtol).value_set.scaled(1.0 / mass), {}};
  if (!common.empty()) {
    r.intersection = PointSet(common);
    for (const Point& p : common) r.lower_margin = std::max(r.lower_margin, r.normalized.distance_to(p));
  }
  r.lower_ok = r.lower_margin <= tol;

  const ConvexHull hull(set_union(samples));
  r.hull_vertices = hull.vertices();
  for (std::size_t i = 0; i < r.normalized.size(); ++i) {
    r.upper_margin = std::max(r.upper_margin, hull.distance(r.normalized.point(i)));
  }
  r.upper_ok = r.upper_margin <= tol;
  return r;
}

}  // namespace mfa
