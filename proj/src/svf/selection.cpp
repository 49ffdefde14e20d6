#include "mfa/svf/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mfa/geometry/operations.hpp"
#include "mfa/parallel.hpp"

namespace mfa {

MetricSelection::MetricSelection(SetValuedFunction f, ChainFunction base, GraphPoint seed, int depth,
                                 double cauchy_defect, Metric metric)
    : f_(std::move(f)),
      base_(std::move(base)),
      seed_(std::move(seed)),
      depth_(depth),
      cauchy_defect_(cauchy_defect),
      metric_(metric) {
  if (base_.a() != f_.a() || base_.b() != f_.b()) throw std::invalid_argument("selection and function domains differ");
}

Point MetricSelection::operator()(double x) const {
  const Partition& chi = base_.partition();
  const std::size_t i = chi.cell_index(x);
  if (chi.node(i) == x) return base_.chain().value(i);
  // x lies strictly inside (x_i, x_{i+1}); continue greedily from the seed side.
  const Point& from = x > seed_.x ? base_.chain().value(i) : base_.chain().value(i + 1);
  const PointSet s = f_(x);
  return s.point(s.project_index(from.coords(), metric_));
}

Point MetricSelection::one_sided(double x, double direction, int limit_levels) const {
  if ((direction < 0 && x <= a()) || (direction > 0 && x >= b())) return (*this)(x);
  const double room = direction < 0 ? x - a() : b() - x;
  double e = std::ldexp(base_.partition().norm(), -std::max(limit_levels, 1));
  e = std::min(e, room / 4);
  const Point p1 = (*this)(x + direction * e);
  const Point p2 = (*this)(x + direction * 2 * e);
  // Linear extrapolation to offset zero; skipped when the probes disagree by
  // more than a smooth branch could explain.
  if (max_abs_diff(p1.coords(), p2.coords()) <= 1e-6) return 2.0 * p1 - p2;
  return p1;
}

Point MetricSelection::left_limit(double x, int limit_levels) const { return one_sided(x, -1.0, limit_levels); }

Point MetricSelection::right_limit(double x, int limit_levels) const { return one_sided(x, 1.0, limit_levels); }

Partition default_probe(const SetValuedFunction& f, int depth) {
  return Partition::dyadic(f.a(), f.b(), std::clamp(depth, 1, 10), f.jump_points());
}

MetricSelection approximate_selection(const SetValuedFunction& f, const GraphPoint& seed, int depth,
                                      const Partition& probe, const Metric& metric) {
  if (depth < 1) throw std::invalid_argument("selection depth must be >= 1");
  std::vector<double> forced(f.jump_points().begin(), f.jump_points().end());
  forced.push_back(seed.x);

  const Partition fine = Partition::dyadic(f.a(), f.b(), depth, forced);
  const Partition coarse = Partition::dyadic(f.a(), f.b(), depth - 1, forced);
  MetricSelection s_fine(f, ChainFunction(greedy_chain(f, fine, seed, metric)), seed, depth, 0.0, metric);
  const MetricSelection s_coarse(f, ChainFunction(greedy_chain(f, coarse, seed, metric)), seed, depth - 1, 0.0,
                                 metric);
  double defect = 0.0;
  for (double x : probe.nodes()) defect = std::max(defect, distance(s_fine(x), s_coarse(x), metric.norm));
  return MetricSelection(f, s_fine.base(), s_fine.seed(), depth, defect, metric);
}

std::vector<Point> sample_points(const PointSet& set, std::size_t count, Norm norm) {
  const std::size_t n = set.size();
  if (count == 0 || count >= n) return set.points();
  std::vector<Point> out;
  out.reserve(count);
  std::vector<double> gap(n, std::numeric_limits<double>::infinity());
  std::size_t pick = 0;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(set.point(pick));
    const auto p = set.coords(pick);
    std::size_t best = 0;
    double best_gap = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      gap[i] = std::min(gap[i], distance(set.coords(i), p, norm));
      if (gap[i] > best_gap) {
        best_gap = gap[i];
        best = i;
      }
    }
    if (best_gap <= 0.0) break;
    pick = best;
  }
  return out;
}

namespace {

std::vector<double> probe_values(const MetricSelection& s, const Partition& probe) {
  std::vector<double> v;
  for (double x : probe.nodes()) {
    const Point p = s(x);
    v.insert(v.end(), p.coords().begin(), p.coords().end());
  }
  return v;
}

SelectionFamily dedup_family(std::vector<MetricSelection> all, std::string grid, Partition probe,
                             double tol) {
  std::vector<std::vector<double>> values(all.size());
  parallel_for(all.size(), [&](std::size_t i) { values[i] = probe_values(all[i], probe); });
  SelectionFamily fam{{}, std::move(grid), std::move(probe)};
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const bool dup = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return max_abs_diff(values[i], values[k]) <= tol;
    });
    if (dup) continue;
    kept.push_back(i);
    fam.selections.push_back(std::move(all[i]));
  }
  return fam;
}

}  // namespace

SelectionFamily selection_family(const SetValuedFunction& f, std::size_t x_seeds, std::size_t y_seeds, int depth,
                                 const Metric& metric) {
  if (x_seeds == 0) throw std::invalid_argument("x_seeds must be positive");
  std::vector<double> xs;
  if (x_seeds == 1) {
    xs.push_back(0.5 * (f.a() + f.b()));
  } else {
    for (std::size_t i = 0; i < x_seeds; ++i) {
      xs.push_back(f.a() + (f.b() - f.a()) * static_cast<double>(i) / static_cast<double>(x_seeds - 1));
    }
    xs.back() = f.b();
  }
  xs.insert(xs.end(), f.jump_points().begin(), f.jump_points().end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<GraphPoint> seeds;
  for (double x : xs) {
    for (Point& y : sample_points(f(x), y_seeds, metric.norm)) seeds.push_back({x, std::move(y)});
  }
  const Partition probe = default_probe(f, depth);
  std::vector<std::optional<MetricSelection>> built(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) { built[i].emplace(approximate_selection(f, seeds[i], depth, probe, metric)); });
  std::vector<MetricSelection> all;
  all.reserve(built.size());
  for (auto& s : built) all.push_back(std::move(*s));

  std::ostringstream grid;
  grid << x_seeds << " uniform abscissae + " << f.jump_points().size() << " jumps; "
       << (y_seeds == 0 ? std::string("all") : std::to_string(y_seeds)) << " values per abscissa; depth " << depth;
  return dedup_family(std::move(all), grid.str(), probe, metric.dedup_tol);
}

SelectionFamily branching_family(const SetValuedFunction& f, const Partition& chi, const Metric& metric) {
  const std::size_t n = chi.size();
  std::vector<PointSet> sets;
  sets.reserve(n);
  for (double x : chi.nodes()) sets.push_back(f(x));
  // fwd[i][j]: points of F(x_{i+1}) forming a metric pair with point j of F(x_i);
  // bwd[i][k]: the reverse relation seen from F(x_{i+1}).
  std::vector<std::vector<std::vector<std::size_t>>> fwd(n - 1), bwd(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    fwd[i].resize(sets[i].size());
    bwd[i].resize(sets[i + 1].size());
    for (const auto& [ja, jb] : metric_pairs(sets[i], sets[i + 1], metric).pairs) {
      fwd[i][ja].push_back(jb);
      bwd[i][jb].push_back(ja);
    }
  }

  // Grow outward from every graph point (node k, point j), branching over all
  // metric-pair neighbours on each side.
  std::set<std::vector<std::size_t>> chains;
  std::vector<std::vector<std::size_t>> right, left, next;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < sets[k].size(); ++j) {
      right = {{j}};
      for (std::size_t i = k; i + 1 < n; ++i) {
        next.clear();
        for (const auto& path : right) {
          for (std::size_t q : fwd[i][path.back()]) {
            next.push_back(path);
            next.back().push_back(q);
          }
        }
        right.swap(next);
        if (right.size() > metric.chain_limit) throw ChainExplosionError("branching family exceeds the chain limit");
      }
      left = {{j}};
      for (std::size_t i = k; i-- > 0;) {
        next.clear();
        for (const auto& path : left) {
          for (std::size_t q : bwd[i][path.back()]) {
            next.push_back(path);
            next.back().push_back(q);
          }
        }
        left.swap(next);
        if (left.size() > metric.chain_limit) throw ChainExplosionError("branching family exceeds the chain limit");
      }
      for (const auto& l : left) {
        for (const auto& r : right) {
          std::vector<std::size_t> chain(l.rbegin(), l.rend());
          chain.insert(chain.end(), r.begin() + 1, r.end());
          chains.insert(std::move(chain));
          if (chains.size() > metric.chain_limit) throw ChainExplosionError("branching family exceeds the chain limit");
        }
      }
    }
  }

  std::vector<MetricSelection> all;
  all.reserve(chains.size());
  for (const auto& idx : chains) {
    std::vector<Point> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) values.push_back(sets[i].point(idx[i]));
    GraphPoint seed{chi.node(0), values.front()};
    all.emplace_back(f, ChainFunction(MetricChain(chi, std::move(values))), std::move(seed), 0, 0.0, metric);
  }
  return SelectionFamily{std::move(all), "all metric chains through every graph point of the partition", chi};
}

}  // namespace mfa
