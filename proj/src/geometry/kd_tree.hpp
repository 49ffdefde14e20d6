#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mfa/geometry/metric.hpp"

namespace mfa::detail {

// Static k-d tree over a flat coordinate array. Leaves hold small buckets.
// The tree keeps its own reordered copy of the coordinates.
class KdTree {
 public:
  KdTree() = default;
  KdTree(std::span<const double> coords, std::size_t dim);

  bool built() const { return !nodes_.empty(); }

  double nearest_distance(std::span<const double> q, Norm norm) const;

  // Appends every index whose distance to q is at most radius.
  void within(std::span<const double> q, double radius, Norm norm,
              std::vector<std::size_t>& out) const;

 private:
  struct Node {
    std::uint32_t begin = 0;
    std::uint32_t end = 0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::uint32_t axis = 0;
    double split = 0.0;
  };

  std::int32_t build(std::uint32_t begin, std::uint32_t end);
  void search_nearest(std::int32_t node, std::span<const double> q, Norm norm, double& best) const;
  void search_within(std::int32_t node, std::span<const double> q, double radius, Norm norm,
                     std::vector<std::size_t>& out) const;
  const double* at(std::uint32_t slot) const { return pts_.data() + std::size_t(slot) * dim_; }

  std::vector<double> pts_;
  std::size_t dim_ = 0;
  std::vector<std::uint32_t> perm_;
  std::vector<Node> nodes_;
};

}  // namespace mfa::detail
