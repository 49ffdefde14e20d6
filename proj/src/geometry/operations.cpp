#include "mfa/geometry/operations.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mfa {

namespace {

void require_same_dim(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point set dimension mismatch");
}

void require_same_dim(std::span<const PointSet> sets) {
  if (sets.empty()) throw std::invalid_argument("at least one set is required");
  for (const PointSet& s : sets) require_same_dim(sets.front(), s);
}

using Successors = std::vector<std::vector<std::size_t>>;

// succ[i][j] lists the indices k of sets[i+1] such that (sets[i][j], sets[i+1][k])
// is a metric pair.
std::vector<Successors> successor_lists(std::span<const PointSet> sets, const Metric& m) {
  std::vector<Successors> succ;
  succ.reserve(sets.size() > 0 ? sets.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
    const MetricPairList pl = metric_pairs(sets[i], sets[i + 1], m);
    Successors s(sets[i].size());
    for (const auto& [ia, ib] : pl.pairs) s[ia].push_back(ib);
    succ.push_back(std::move(s));
  }
  return succ;
}

std::size_t saturating_add(std::size_t a, std::size_t b, std::size_t cap) {
  return (a > cap || b > cap || a + b > cap) ? cap : a + b;
}

std::size_t count_from_lists(std::span<const PointSet> sets, const std::vector<Successors>& succ,
                             std::size_t cap) {
  // ways[j] = number of chains starting at point j of the current set.
  std::vector<std::size_t> ways(sets.back().size(), 1);
  for (std::size_t i = sets.size() - 1; i-- > 0;) {
    std::vector<std::size_t> next(sets[i].size(), 0);
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      for (std::size_t k : succ[i][j]) next[j] = saturating_add(next[j], ways[k], cap);
    }
    ways = std::move(next);
  }
  std::size_t total = 0;
  for (std::size_t w : ways) total = saturating_add(total, w, cap);
  return total;
}

void check_limit(std::size_t count, const Metric& m, const char* what) {
  if (count > m.chain_limit) {
    throw ChainExplosionError(std::string(what) + ": more than " + std::to_string(m.chain_limit) +
                              " metric chains; use greedy chains (selection families) instead");
  }
}

}  // namespace

PointSetDistance dist_point_set(const Point& p, const PointSet& b, const Metric& m) {
  if (p.dim() != b.dim()) throw std::invalid_argument("point/set dimension mismatch");
  const Nearest nn = b.nearest(p, m);
  std::vector<double> c;
  c.reserve(nn.indices.size() * b.dim());
  for (std::size_t i : nn.indices) c.insert(c.end(), b.coords(i).begin(), b.coords(i).end());
  return {nn.distance, PointSet::from_coords(b.dim(), std::move(c), b.dedup_tol())};
}

double directed_hausdorff(const PointSet& a, const PointSet& b, const Metric& m) {
  require_same_dim(a, b);
  if (a.id() == b.id()) return 0.0;
  double h = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) h = std::max(h, b.distance_to(a.coords(i), m.norm));
  return h;
}

double hausdorff(const PointSet& a, const PointSet& b, const Metric& m) {
  return std::max(directed_hausdorff(a, b, m), directed_hausdorff(b, a, m));
}

double set_norm(const PointSet& a, Norm norm) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, norm_of(a.coords(i), norm));
  return r;
}

bool MetricPairList::contains(std::size_t ia, std::size_t ib) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(ia, ib));
}

MetricPairList metric_pairs(const PointSet& a, const PointSet& b, const Metric& m) {
  require_same_dim(a, b);
  MetricPairList out{a, b, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j : b.nearest(a.coords(i), m.norm, m.tie_tol).indices) out.pairs.emplace_back(i, j);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i : a.nearest(b.coords(j), m.norm, m.tie_tol).indices) out.pairs.emplace_back(i, j);
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
  return out;
}

bool is_metric_pair(const Point& p, const Point& q, const PointSet& a, const PointSet& b,
                    const Metric& m) {
  require_same_dim(a, b);
  if (p.dim() != a.dim() || q.dim() != b.dim()) throw std::invalid_argument("point/set dimension mismatch");
  const double pq = distance(p, q, m.norm);
  return pq <= b.distance_to(p.coords(), m.norm) + m.tie_tol ||
         pq <= a.distance_to(q.coords(), m.norm) + m.tie_tol;
}

PointSet metric_average(double t, const PointSet& a, const PointSet& b, const Metric& m) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("metric average parameter must lie in [0,1]");
  const MetricPairList pl = metric_pairs(a, b, m);
  const std::size_t d = a.dim();
  std::vector<double> c;
  c.reserve(pl.size() * d);
  for (const auto& [ia, ib] : pl.pairs) {
    const auto pa = a.coords(ia);
    const auto pb = b.coords(ib);
    for (std::size_t k = 0; k < d; ++k) c.push_back((1.0 - t) * pa[k] + t * pb[k]);
  }
  return PointSet::from_coords(d, std::move(c), std::max(a.dedup_tol(), b.dedup_tol()));
}

std::size_t count_metric_chains(std::span<const PointSet> sets, const Metric& m) {
  require_same_dim(sets);
  const auto succ = successor_lists(sets, m);
  return count_from_lists(sets, succ, m.chain_limit + 1);
}

void for_each_metric_chain(std::span<const PointSet> sets, const Metric& m,
                           const std::function<void(std::span<const std::size_t>)>& visit) {
  require_same_dim(sets);
  const auto succ = successor_lists(sets, m);
  check_limit(count_from_lists(sets, succ, m.chain_limit + 1), m, "metric chain enumeration");

  const std::size_t n = sets.size();
  ChainIndices chain(n, 0);
  // Iterative depth-first search; pos[i] is the cursor into the successor list
  // of chain[i - 1].
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t start = 0; start < sets.front().size(); ++start) {
    chain[0] = start;
    if (n == 1) {
      visit(chain);
      continue;
    }
    std::size_t depth = 1;
    pos[1] = 0;
    while (depth > 0) {
      const auto& options = succ[depth - 1][chain[depth - 1]];
      if (pos[depth] >= options.size()) {
        --depth;
        if (depth > 0) ++pos[depth];
        continue;
      }
      chain[depth] = options[pos[depth]];
      if (depth + 1 == n) {
        visit(chain);
        ++pos[depth];
      } else {
        ++depth;
        pos[depth] = 0;
      }
    }
  }
}

std::vector<ChainIndices> enumerate_metric_chains(std::span<const PointSet> sets, const Metric& m) {
  std::vector<ChainIndices> out;
  for_each_metric_chain(sets, m, [&](std::span<const std::size_t> c) {
    out.emplace_back(c.begin(), c.end());
  });
  return out;
}

PointSet metric_linear_combination(std::span<const double> lambdas, std::span<const PointSet> sets,
                                   const Metric& m) {
  if (lambdas.size() != sets.size()) throw std::invalid_argument("lambdas and sets differ in length");
  require_same_dim(sets);
  const std::size_t d = sets.front().dim();
  double tol = 0.0;
  for (const PointSet& s : sets) tol = std::max(tol, s.dedup_tol());
  std::vector<double> sums;
  std::vector<double> acc(d);
  for_each_metric_chain(sets, m, [&](std::span<const std::size_t> chain) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto p = sets[i].coords(chain[i]);
      for (std::size_t k = 0; k < d; ++k) acc[k] += lambdas[i] * p[k];
    }
    sums.insert(sums.end(), acc.begin(), acc.end());
  });
  return PointSet::from_coords(d, std::move(sums), tol);
}

PointSet minkowski_combination(std::span<const double> lambdas, std::span<const PointSet> sets,
                               const Metric& m) {
  if (lambdas.size() != sets.size()) throw std::invalid_argument("lambdas and sets differ in length");
  require_same_dim(sets);
  const std::size_t d = sets.front().dim();
  double tol = 0.0;
  for (const PointSet& s : sets) tol = std::max(tol, s.dedup_tol());
  PointSet current = sets.front().scaled(lambdas[0]);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    const std::size_t count = current.size() * sets[i].size();
    check_limit(count, m, "Minkowski combination");
    std::vector<double> c;
    c.reserve(count * d);
    for (std::size_t u = 0; u < current.size(); ++u) {
      const auto p = current.coords(u);
      for (std::size_t v = 0; v < sets[i].size(); ++v) {
        const auto q = sets[i].coords(v);
        for (std::size_t k = 0; k < d; ++k) c.push_back(p[k] + lambdas[i] * q[k]);
      }
    }
    current = PointSet::from_coords(d, std::move(c), tol);
  }
  return current;
}

}  // namespace mfa
