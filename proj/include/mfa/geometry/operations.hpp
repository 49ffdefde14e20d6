#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mfa/geometry/metric.hpp"
#include "mfa/geometry/point.hpp"
#include "mfa/geometry/point_set.hpp"

namespace mfa {

// Thrown when exact chain enumeration would exceed Metric::chain_limit.
class ChainExplosionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PointSetDistance {
  double value = 0.0;
  PointSet witnesses;  // the projection set of p onto B
};

PointSetDistance dist_point_set(const Point& p, const PointSet& b, const Metric& m = {});

double hausdorff(const PointSet& a, const PointSet& b, const Metric& m = {});

// sup over a of dist(a, B).
double directed_hausdorff(const PointSet& a, const PointSet& b, const Metric& m = {});

// Distance of the set from the origin, max |a|.
double set_norm(const PointSet& a, Norm norm = Norm::l2);

// Metric pairs of (A, B) as index pairs into A and B, sorted and unique.
struct MetricPairList {
  PointSet a;
  PointSet b;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t size() const { return pairs.size(); }
  std::pair<Point, Point> pair(std::size_t k) const {
    return {a.point(pairs[k].first), b.point(pairs[k].second)};
  }
  bool contains(std::size_t ia, std::size_t ib) const;
};

MetricPairList metric_pairs(const PointSet& a, const PointSet& b, const Metric& m = {});

// Whether (p, q) is a metric pair of (A, B): p in Pi_A(q) or q in Pi_B(p).
// p and q must be points of A and B (within dedup_tol).
bool is_metric_pair(const Point& p, const Point& q, const PointSet& a, const PointSet& b,
                    const Metric& m = {});

PointSet metric_average(double t, const PointSet& a, const PointSet& b, const Metric& m = {});

// Metric chains as index tuples, one index per set.
using ChainIndices = std::vector<std::size_t>;

// Number of metric chains, saturating at limit + 1.
std::size_t count_metric_chains(std::span<const PointSet> sets, const Metric& m = {});

// Calls visit for every metric chain in lexicographic index order. Throws
// ChainExplosionError before visiting anything when the count exceeds the limit.
void for_each_metric_chain(std::span<const PointSet> sets, const Metric& m,
                           const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<ChainIndices> enumerate_metric_chains(std::span<const PointSet> sets,
                                                  const Metric& m = {});

PointSet metric_linear_combination(std::span<const double> lambdas, std::span<const PointSet> sets,
                                   const Metric& m = {});

PointSet minkowski_combination(std::span<const double> lambdas, std::span<const PointSet> sets,
                               const Metric& m = {});

}  // namespace mfa
