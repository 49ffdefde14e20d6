#include "mfa/cli/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <sstream>

#include "mfa/cli/inline_svf.hpp"
#include "mfa/fourier/bounds.hpp"
#include "mfa/fourier/metric_fourier.hpp"
#include "mfa/geometry/operations.hpp"
#include "mfa/integral/metric_integral.hpp"
#include "mfa/svf/fixtures.hpp"

namespace mfa::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Csv {
 public:
  explicit Csv(const std::vector<std::string>& header) { row_strings(header); }

  void row(const std::vector<std::string>& cells) { row_strings(cells); }
  std::string str() const { return out_.str(); }

 private:
  void row_strings(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << '\n';
  }
  std::ostringstream out_;
};

std::vector<std::string> coord_header(std::size_t d) {
  std::vector<std::string> h;
  for (std::size_t i = 0; i < d; ++i) h.push_back("y" + std::to_string(i));
  return h;
}

void append_coords(std::vector<std::string>& row, std::span<const double> c) {
  for (double v : c) row.push_back(format_double(v));
}

void require_in_domain(const SetValuedFunction& f, double x) {
  if (!(x >= f.a() && x <= f.b())) throw ConfigError("x_grid entry " + format_double(x) + " lies outside the domain");
}

void require_interior(const SetValuedFunction& f, double x) {
  if (!(x > f.a() && x < f.b())) {
    throw ConfigError("x_grid entry " + format_double(x) + " must lie inside the open domain");
  }
}

Metric metric_with_tol(const ExperimentConfig& cfg, const PointSet& sample) {
  Metric m = cfg.metric;
  m.dedup_tol = std::max(m.dedup_tol, sample.dedup_tol());
  return m;
}

WeightFunction weight_for(const ExperimentConfig& cfg, double a, double b) {
  const WeightSpec& w = cfg.weight;
  if (w.kind == "linear") return WeightFunction::linear(w.c1, w.c0, a, b);
  if (w.kind == "cosine") return WeightFunction::cosine(w.c0, w.c1, a, b);
  return WeightFunction::constant(w.c0);
}

struct Check {
  std::ostringstream out;
  bool all = true;

  void operator()(bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << '\n';
    all = all && ok;
  }
};

SelectionFamily seeded_family(const SetValuedFunction& f, const std::vector<GraphPoint>& seeds, int depth,
                              const Metric& m) {
  SelectionFamily fam{{}, "explicit", default_probe(f, depth)};
  for (const GraphPoint& g : seeds) fam.selections.push_back(approximate_selection(f, g, depth, fam.probe, m));
  return fam;
}

RunResult example_lines(const ExperimentConfig& cfg) {
  Check check;
  const double x0 = cfg.jump;
  const auto fx = fixtures::lines(x0);
  const Metric m = cfg.metric;

  const PointSet avg = metric_average(0.5, PointSet::scalars({-0.25, 0.0, 0.25}), PointSet::scalars({-1.0, 1.0}), m);
  check(approx_equal(avg, PointSet::scalars({-0.625, -0.5, 0.5, 0.625}), m.dedup_tol),
        "metric average of {-1/4, 0, 1/4} and {-1, 1} is {-5/8, -1/2, 1/2, 5/8}");

  const SelectionFamily fam = family_for(fx.f, cfg);
  const PointSet af = limit_set_AF(fam, x0);
  const double gap = af.distance_to(Point{0.5});
  check(gap >= 0.125 - 1e-9, "1/2 is not in A_F(x), distance " + format_double(gap) + " >= 1/8");

  const PointSet left = left_limit_set(fam, x0), right = right_limit_set(fam, x0);
  const PointSet mink = minkowski_combination(std::vector<double>{0.5, 0.5}, std::vector<PointSet>{left, right}, m);
  check(directed_hausdorff(af, mink, m) <= cfg.membership_tol,
        "A_F(x) lies in the Minkowski average of the one-sided limit sets");

  std::ostringstream csv;
  csv << "y0\n";
  for (std::size_t i = 0; i < af.size(); ++i) csv << format_double(af.point(i)[0]) << '\n';
  return RunResult{csv.str(), check.out.str(), check.all ? 0 : 1};
}

RunResult example_balls(const ExperimentConfig& cfg) {
  Check check;
  const double x0 = cfg.jump, eps = cfg.eps;
  const auto fx = fixtures::balls(eps, x0);
  const Metric m = cfg.metric;
  const double r = std::sqrt(2.0) / 2.0;
  const PointSet left = fx.f(x0 - 0.5 * (x0 + kPi));
  const PointSet right = fx.f(x0 + 0.5 * (kPi - x0));
  const Point origin{0.0, 0.0};

  const Point proj = left.point(left.project_index(origin.coords(), m));
  const double err = distance(proj, Point{-2.0 + r, 2.0 - r});
  check(err <= 2 * eps, "projection of (0,0) onto B(-2,2) is within 2 eps of (-2+sqrt2/2, 2-sqrt2/2), error " +
                            format_double(err));

  const SelectionFamily fam = seeded_family(fx.f, {GraphPoint{x0, origin}}, cfg.seeds.depth, m);
  const MetricSelection& s = fam.selections.front();
  const PointSet af = limit_set_AF(fam, x0);
  const double miss = af.distance_to(Point{0.0, 2.0 - r});
  check(miss <= 2 * eps, "(0, 2-sqrt2/2) is within 2 eps of A_F(x), distance " + format_double(miss));

  const Point lo = s.left_limit(x0), hi = s.right_limit(x0);
  check(!is_metric_pair(lo, hi, left, right, m), "(s(x-0), s(x+0)) is not a metric pair of (F(x-0), F(x+0))");

  std::ostringstream csv;
  csv << "y0,y1\n";
  for (std::size_t i = 0; i < af.size(); ++i) {
    csv << format_double(af.point(i)[0]) << ',' << format_double(af.point(i)[1]) << '\n';
  }
  return RunResult{csv.str(), check.out.str(), check.all ? 0 : 1};
}

RunResult example_inclusion(const ExperimentConfig& cfg) {
  Check check;
  std::ostringstream csv;
  csv << "fixture,lower_ok,upper_ok,lower_margin,upper_margin,intersection_size\n";
  const fixtures::SvfFixture suite[] = {fixtures::zero_and_shifted_sine(),
                                        fixtures::constant_set(PointSet::scalars({-1.0, 1.0})), fixtures::lines()};
  for (const auto& fx : suite) {
    const WeightFunction k = weight_for(cfg, fx.f.a(), fx.f.b());
    const SelectionFamily fam = family_for(fx.f, cfg);
    const InclusionReport rep = inclusion_check(fx.f, k, fam, cfg.membership_tol, 257, cfg.qtol);
    const std::size_t common = rep.intersection ? rep.intersection->size() : 0;
    check(rep.lower_ok, fx.name + ": intersection of F(x) lies in the normalized integral (" +
                            std::to_string(common) + " common points)");
    check(rep.upper_ok, fx.name + ": normalized integral lies in the hull of the union of F(x)");
    csv << fx.name << ',' << rep.lower_ok << ',' << rep.upper_ok << ',' << format_double(rep.lower_margin) << ','
        << format_double(rep.upper_margin) << ',' << common << '\n';
  }
  return RunResult{csv.str(), check.out.str(), check.all ? 0 : 1};
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

MonotoneFunction sampled_variation(const SetValuedFunction& f, int depth, const Metric& m) {
  const Partition grid = Partition::dyadic(f.a(), f.b(), depth, f.jump_points());
  const auto samples = variation_function_samples(MetricPath::of_svf(f, m), grid);
  auto data = std::make_shared<const std::vector<std::pair<double, double>>>(samples);
  auto at_or_before = [data](double t) {
    const auto it = std::upper_bound(data->begin(), data->end(), t,
                                     [](double v, const std::pair<double, double>& s) { return v < s.first; });
    return it == data->begin() ? 0.0 : std::prev(it)->second;
  };
  MonotoneFunction v;
  v.a = f.a();
  v.b = f.b();
  v.value = at_or_before;
  v.left_limit = [data](double t) {
    const auto it = std::lower_bound(data->begin(), data->end(), t,
                                     [](const std::pair<double, double>& s, double v) { return s.first < v; });
    return it == data->begin() ? 0.0 : std::prev(it)->second;
  };
  v.right_limit = [data](double t) {
    const auto it = std::upper_bound(data->begin(), data->end(), t,
                                     [](double v, const std::pair<double, double>& s) { return v < s.first; });
    return it == data->end() ? data->back().second : it->second;
  };
  return v;
}

ResolvedSvf resolve_svf(const ExperimentConfig& cfg) {
  if (cfg.svf) {
    SetValuedFunction f = parse_inline_svf(*cfg.svf, cfg.metric.dedup_tol);
    MonotoneFunction v = sampled_variation(f, std::min(cfg.seeds.depth, 14), cfg.metric);
    double sup = 0.0;
    for (double x : Partition::dyadic(f.a(), f.b(), 8, f.jump_points()).nodes()) {
      sup = std::max(sup, set_norm(f(x), cfg.metric.norm));
    }
    return ResolvedSvf{"inline", f, v, sup, false};
  }
  if (cfg.fixture.empty()) throw ConfigError("config names neither a fixture nor an inline svf");
  fixtures::SvfFixture fx = [&] {
    try {
      if (cfg.fixture == "lines") return fixtures::lines(cfg.jump);
      if (cfg.fixture == "balls") return fixtures::balls(cfg.eps, cfg.jump);
      if (cfg.fixture == "unit-step") return fixtures::unit_step(cfg.jump);
      return fixtures::by_name(cfg.fixture);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  return ResolvedSvf{fx.name, fx.f, fx.variation, fx.sup_norm, true};
}

PeriodicFunction scalar_by_name(const std::string& name, double jump) {
  if (name == "square-wave") return square_wave();
  if (name == "sawtooth") return sawtooth(jump);
  if (name == "monotone-step") return monotone_step();
  if (name == "trig") {
    const auto fx = fixtures::trig_singleton();
    return smooth_periodic("trig", fixtures::trig_singleton_value, fx.total_variation());
  }
  throw ConfigError("unknown scalar function '" + name + "'");
}

SelectionFamily family_for(const SetValuedFunction& f, const ExperimentConfig& cfg) {
  return selection_family(f, cfg.seeds.x_seeds, cfg.seeds.y_seeds, cfg.seeds.depth, cfg.metric);
}

RunResult run_convergence(const ExperimentConfig& cfg) {
  const ResolvedSvf svf = resolve_svf(cfg);
  for (double x : cfg.x_grid) require_interior(svf.f, x);
  const SelectionFamily fam = family_for(svf.f, cfg);
  const FamilyQuadrature quad(fam);
  Csv csv({"n", "x", "target", "distance", "family_size"});
  for (int n : cfg.orders) {
    for (double x : cfg.x_grid) {
      const bool jump = svf.f.is_jump(x);
      const PointSet target = jump ? limit_set_AF(fam, x) : svf.f(x);
      const FourierApproximant s = metric_fourier(quad, n, x);
      const double d = hausdorff(s.value_set, target, metric_with_tol(cfg, target));
      csv.row({std::to_string(n), format_double(x), jump ? "A_F" : "F", format_double(d),
               std::to_string(s.family_size)});
    }
  }
  std::ostringstream rep;
  rep << "convergence on " << svf.name << " with " << fam.size() << " selections (seed grid " << fam.seed_grid
      << ")\n";
  return RunResult{csv.str(), rep.str(), 0};
}

RunResult run_bound_check(const ExperimentConfig& cfg) {
  std::ostringstream rep;
  bool all = true;
  if (!cfg.scalar.empty()) {
    const PeriodicFunction f = scalar_by_name(cfg.scalar, cfg.jump);
    const int top = *std::max_element(cfg.orders.begin(), cfg.orders.end());
    const FourierCoefficients c = fourier_coefficients(f, top, cfg.qtol);
    Csv csv({"n", "x", "observed", "bound_rhs", "delta", "pass"});
    for (int n : cfg.orders) {
      for (double x : cfg.x_grid) {
        const double observed = std::abs(classical_partial_sum(c, n, x) - f.midpoint(x));
        const BestBound b = djordan_bound_best(f.variation, cfg.C, scalar_omega(f, x), n);
        const bool pass = observed <= b.value;
        all = all && pass;
        csv.row({std::to_string(n), format_double(x), format_double(observed), format_double(b.value),
                 format_double(b.delta), pass ? "1" : "0"});
      }
    }
    rep << "bound check on " << f.name << " with B = " << format_double(f.variation) << ", C = "
        << format_double(cfg.C) << ": " << (all ? "all rows pass" : "some rows fail") << '\n';
    return RunResult{csv.str(), rep.str(), all ? 0 : 1};
  }

  const ResolvedSvf svf = resolve_svf(cfg);
  for (double x : cfg.x_grid) require_interior(svf.f, x);
  const SelectionFamily fam = family_for(svf.f, cfg);
  const FamilyQuadrature quad(fam);
  const double V = svf.variation.value(svf.f.b());
  const double K = cfg.K.value_or(default_K(cfg.metric.norm, svf.f.dim()));
  Csv csv({"n", "x", "observed", "unit_bound", "K", "bound_rhs", "delta", "pass"});
  std::vector<double> observed_all, unit_all;
  for (int n : cfg.orders) {
    for (double x : cfg.x_grid) {
      const PointSet af = limit_set_AF(fam, x);
      const double observed = hausdorff(metric_fourier(quad, n, x).value_set, af, metric_with_tol(cfg, af));
      const BestBound unit = svf_bound_best(V, n, svf_omega(svf.variation, x), 1.0, svf_delta0(x));
      const bool pass = observed <= K * unit.value;
      all = all && pass;
      observed_all.push_back(observed);
      unit_all.push_back(unit.value);
      csv.row({std::to_string(n), format_double(x), format_double(observed), format_double(unit.value),
               format_double(K), format_double(K * unit.value), format_double(unit.delta), pass ? "1" : "0"});
    }
  }
  const KCalibration cal = calibrate_K(observed_all, unit_all);
  rep << "bound check on " << svf.name << " with K = " << format_double(K) << (cfg.K ? " (given)" : " (theoretical)")
      << "; calibrated K = " << format_double(cal.K) << " over " << cal.samples << " rows"
      << (svf.exact_variation ? "" : "; variation sampled") << '\n';
  return RunResult{csv.str(), rep.str(), all ? 0 : 1};
}

RunResult run_example(const std::string& name, const ExperimentConfig& cfg) {
  if (name == "lines") return example_lines(cfg);
  if (name == "balls") return example_balls(cfg);
  if (name == "integral-inclusion") return example_inclusion(cfg);
  throw ConfigError("unknown example '" + name + "' (expected balls, lines or integral-inclusion)");
}

RunResult run_integral(const ExperimentConfig& cfg) {
  const ResolvedSvf svf = resolve_svf(cfg);
  const WeightFunction k = weight_for(cfg, svf.f.a(), svf.f.b());
  const Partition chi = Partition::uniform(svf.f.a(), svf.f.b(), cfg.cells).with_nodes(svf.f.jump_points());
  IntegralResult result{PointSet::scalars({0.0}), IntegralMethod::exact_chains, chi.norm()};
  if (cfg.method == "exact") {
    result.value_set = weighted_metric_riemann_sum(svf.f, k, chi, cfg.metric);
  } else if (cfg.method == "aumann") {
    result = aumann_integral_convex(svf.f, k, chi);
  } else {
    result = weighted_metric_integral(family_for(svf.f, cfg), k, cfg.qtol);
  }
  Csv csv(coord_header(result.value_set.dim()));
  for (std::size_t i = 0; i < result.value_set.size(); ++i) {
    std::vector<std::string> row;
    append_coords(row, result.value_set.coords(i));
    csv.row(row);
  }
  std::ostringstream rep;
  rep << "integral of " << svf.name << " by " << to_string(result.method) << ": " << result.value_set.size()
      << " points, partition norm " << format_double(result.partition_norm) << '\n';
  return RunResult{csv.str(), rep.str(), 0};
}

RunResult run_hausdorff(const ExperimentConfig& cfg) {
  auto to_set = [&](const std::vector<std::vector<double>>& pts) {
    std::vector<Point> p;
    for (const auto& c : pts) p.emplace_back(c);
    return PointSet(p, cfg.metric.dedup_tol);
  };
  std::optional<PointSet> a, b;
  try {
    if (!cfg.set_a.empty() && !cfg.set_b.empty()) {
      a = to_set(cfg.set_a);
      b = to_set(cfg.set_b);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("sets: ") + e.what());
  }
  if (!a) {
    if (cfg.x_grid.size() < 2) throw ConfigError("hausdorff needs sets.A and sets.B, or a fixture and two x_grid entries");
    const ResolvedSvf svf = resolve_svf(cfg);
    require_in_domain(svf.f, cfg.x_grid[0]);
    require_in_domain(svf.f, cfg.x_grid[1]);
    a = svf.f(cfg.x_grid[0]);
    b = svf.f(cfg.x_grid[1]);
  }
  if (a->dim() != b->dim()) throw ConfigError("sets have different dimensions");
  Csv csv({"hausdorff", "directed_ab", "directed_ba"});
  csv.row({format_double(hausdorff(*a, *b, cfg.metric)), format_double(directed_hausdorff(*a, *b, cfg.metric)),
           format_double(directed_hausdorff(*b, *a, cfg.metric))});
  return RunResult{csv.str(), "", 0};
}

RunResult run_selections(const ExperimentConfig& cfg) {
  const ResolvedSvf svf = resolve_svf(cfg);
  const SelectionFamily fam = family_for(svf.f, cfg);
  std::vector<double> xs = cfg.x_grid;
  if (xs.size() < 2) xs.assign(fam.probe.nodes().begin(), fam.probe.nodes().end());
  for (double x : xs) require_in_domain(svf.f, x);
  std::vector<std::string> header{"selection", "seed_x", "x"};
  for (auto& h : coord_header(svf.f.dim())) header.push_back(h);
  Csv csv(header);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const MetricSelection& s = fam.selections[i];
    for (double x : xs) {
      std::vector<std::string> row{std::to_string(i), format_double(s.seed().x), format_double(x)};
      append_coords(row, s(x).coords());
      csv.row(row);
    }
  }
  std::ostringstream rep;
  rep << fam.size() << " selections of " << svf.name << " (seed grid " << fam.seed_grid << ")\n";
  return RunResult{csv.str(), rep.str(), 0};
}

}  // namespace mfa::cli
