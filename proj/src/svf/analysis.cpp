#include "mfa/svf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "mfa/geometry/operations.hpp"

namespace mfa {

MetricPath::MetricPath(double a, double b, Distance dist, std::vector<double> breakpoints)
    : a_(a), b_(b), dist_(std::move(dist)), breakpoints_(std::move(breakpoints)) {
  if (!(b_ > a_)) throw std::invalid_argument("path domain must satisfy a < b");
}

MetricPath MetricPath::scalar(std::function<double(double)> g, double a, double b, std::vector<double> breakpoints) {
  MetricPath p(a, b, [g](double x1, double x2) { return std::abs(g(x1) - g(x2)); }, std::move(breakpoints));
  p.values_ = std::move(g);
  return p;
}

MetricPath MetricPath::of_points(std::function<Point(double)> g, double a, double b, Norm norm,
                                 std::vector<double> breakpoints) {
  return MetricPath(a, b, [g = std::move(g), norm](double x1, double x2) { return mfa::distance(g(x1), g(x2), norm); },
                    std::move(breakpoints));
}

MetricPath MetricPath::of_svf(const SetValuedFunction& f, const Metric& m) {
  std::vector<double> jumps(f.jump_points().begin(), f.jump_points().end());
  return MetricPath(f.a(), f.b(), [f, m](double x1, double x2) { return hausdorff(f(x1), f(x2), m); },
                    std::move(jumps));
}

MetricPath MetricPath::of_chain(const ChainFunction& c, Norm norm) {
  auto shared = std::make_shared<ChainFunction>(c);
  std::vector<double> nodes(c.partition().nodes().begin(), c.partition().nodes().end());
  return MetricPath(c.a(), c.b(), [shared, norm](double x1, double x2) { return mfa::distance((*shared)(x1), (*shared)(x2), norm); },
                    std::move(nodes));
}

double variation_on_partition(const MetricPath& g, const Partition& chi) {
  double v = 0.0;
  for (std::size_t i = 1; i < chi.size(); ++i) v += g.distance(chi.node(i - 1), chi.node(i));
  return v;
}

VariationEstimate total_variation(const MetricPath& g, int depth, std::span<const double> forced, double vtol) {
  std::vector<double> extra(g.breakpoints());
  extra.insert(extra.end(), forced.begin(), forced.end());
  VariationEstimate est;
  // Coarse levels can coincide once forced nodes are added, so stopping starts
  // at level kMinLevel.
  constexpr int kMinLevel = 4;
  double prev = -1.0;
  for (int k = 0; k <= depth; ++k) {
    est.value = variation_on_partition(g, Partition::dyadic(g.a(), g.b(), k, extra));
    if (k > kMinLevel && std::abs(est.value - prev) < vtol) {
      est.converged = true;
      break;
    }
    prev = est.value;
  }
  return est;
}

std::vector<std::pair<double, double>> variation_function_samples(const MetricPath& g, const Partition& chi) {
  std::vector<std::pair<double, double>> out;
  out.reserve(chi.size());
  double acc = 0.0;
  out.emplace_back(chi.node(0), 0.0);
  for (std::size_t i = 1; i < chi.size(); ++i) {
    acc += g.distance(chi.node(i - 1), chi.node(i));
    out.emplace_back(chi.node(i), acc);
  }
  return out;
}

namespace {

// Probe abscissae on one side of x (direction -1 or +1) within distance delta,
// excluding x itself, sorted by increasing offset.
std::vector<double> side_probes(const MetricPath& g, double x, double delta, double direction,
                                const ModuliOptions& o) {
  std::vector<double> off;
  for (int j = 0; j <= o.geometric_levels; ++j) off.push_back(std::ldexp(delta, -j));
  for (int j = 1; j <= o.uniform_probes; ++j) off.push_back(delta * j / o.uniform_probes);
  std::sort(off.begin(), off.end());
  off.erase(std::unique(off.begin(), off.end()), off.end());
  std::vector<double> t;
  for (double e : off) {
    const double p = x + direction * e;
    if (p >= g.a() && p <= g.b()) t.push_back(p);
  }
  return t;
}

}  // namespace

LocalModuli local_moduli(const MetricPath& g, double x, double delta, const ModuliOptions& opts) {
  if (!(delta > 0.0)) throw std::invalid_argument("moduli need delta > 0");
  if (!(x >= g.a() && x <= g.b())) throw std::out_of_range("moduli point outside the domain");
  LocalModuli m;
  const auto left = side_probes(g, x, delta, -1.0, opts);
  const auto right = side_probes(g, x, delta, 1.0, opts);
  for (double t : left) m.left = std::max(m.left, g.distance(x, t));
  for (double t : right) m.right = std::max(m.right, g.distance(x, t));

  const auto* values = g.scalar_values();
  auto quasi = [&](const std::vector<double>& probes) {
    if (probes.empty()) return 0.0;
    if (values) {
      const double near = (*values)(probes.front());
      double limit = near;
      if (probes.size() > 1) {
        // Probe at twice the finest offset, on the same side.
        const double far_t = probes.front() + (probes.front() - x);
        if (far_t >= g.a() && far_t <= g.b()) limit = 2 * near - (*values)(far_t);
      }
      double best = 0.0;
      for (double t : probes) best = std::max(best, std::abs(limit - (*values)(t)));
      return best;
    }
    double best = 0.0;
    for (double t : probes) best = std::max(best, g.distance(probes.front(), t));
    return best;
  };
  m.left_quasi = quasi(left);
  m.right_quasi = quasi(right);

  // Two-sided window [x - delta/2, x + delta/2].
  std::vector<double> w = side_probes(g, x, delta / 2, -1.0, opts);
  const auto wr = side_probes(g, x, delta / 2, 1.0, opts);
  w.insert(w.end(), wr.begin(), wr.end());
  w.push_back(x);
  if (values) {
    double lo = INFINITY, hi = -INFINITY;
    for (double t : w) {
      const double v = (*values)(t);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    m.two_sided = hi - lo;
  } else {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) m.two_sided = std::max(m.two_sided, g.distance(w[i], w[j]));
  }
  return m;
}

LocalModuli monotone_moduli(const MonotoneFunction& v, double x, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("moduli need delta > 0");
  const double lo = std::max(v.a, x - delta);
  const double hi = std::min(v.b, x + delta);
  LocalModuli m;
  const double vx = v.value(x);
  m.left = vx - v.value(lo);
  m.right = v.value(hi) - vx;
  m.two_sided = v.value(std::min(v.b, x + delta / 2)) - v.value(std::max(v.a, x - delta / 2));
  m.left_quasi = x > v.a ? v.left_limit(x) - v.value(lo) : 0.0;
  m.right_quasi = x < v.b ? v.value(hi) - v.right_limit(x) : 0.0;
  return m;
}

LocalModuli chain_moduli(const ChainFunction& c, double x, double delta, Norm norm) {
  if (!(delta > 0.0)) throw std::invalid_argument("moduli need delta > 0");
  const Partition& chi = c.partition();
  const auto& y = c.chain().values();
  const double a = chi.a(), b = chi.b();
  const std::size_t ix = chi.cell_index(x);
  LocalModuli m;
  auto range_max = [&](std::size_t from, std::size_t to, const Point& ref) {
    double best = 0.0;
    for (std::size_t i = from; i <= to; ++i) best = std::max(best, distance(ref, y[i], norm));
    return best;
  };
  const std::size_t il = chi.cell_index(std::max(a, x - delta));
  const std::size_t ir = chi.cell_index(std::min(b, x + delta));
  m.left = range_max(il, ix, y[ix]);
  m.right = range_max(ix, ir, y[ix]);

  // [x - delta, x): cells il .. (cell holding x - 0).
  if (x > a) {
    const std::size_t ileft = chi.node(ix) == x ? ix - 1 : ix;
    m.left_quasi = range_max(std::min(il, ileft), ileft, y[ileft]);
  }
  // (x, x + delta]: the value right of x is y[ix] (right-continuity).
  if (x < b) m.right_quasi = range_max(ix, ir, y[ix]);

  const std::size_t w0 = chi.cell_index(std::max(a, x - delta / 2));
  const std::size_t w1 = chi.cell_index(std::min(b, x + delta / 2));
  for (std::size_t i = w0; i <= w1; ++i)
    for (std::size_t j = i + 1; j <= w1; ++j) m.two_sided = std::max(m.two_sided, distance(y[i], y[j], norm));
  return m;
}

MonotoneFunction chain_variation_function(const ChainFunction& c, Norm norm) {
  auto shared = std::make_shared<const std::pair<Partition, std::vector<double>>>(
      c.partition(), chain_cumulative_variation(c.chain(), norm));
  MonotoneFunction v;
  v.a = c.a();
  v.b = c.b();
  v.value = [shared](double x) { return shared->second[shared->first.cell_index(x)]; };
  v.left_limit = [shared](double x) {
    const Partition& chi = shared->first;
    const std::size_t i = chi.cell_index(x);
    if (chi.node(i) == x && i > 0) return shared->second[i - 1];
    return shared->second[i];
  };
  v.right_limit = [shared](double x) {
    const Partition& chi = shared->first;
    const std::size_t i = chi.cell_index(x);
    return shared->second[std::min(i + 1, chi.size() - 1)];
  };
  return v;
}

}  // namespace mfa
