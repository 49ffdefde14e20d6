#include "geometry/kd_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mfa::detail {

namespace {

constexpr std::uint32_t kLeafSize = 12;

double dist(const double* a, std::span<const double> q, std::size_t d, Norm norm) {
  return distance(std::span<const double>(a, d), q, norm);
}

}  // namespace

KdTree::KdTree(std::span<const double> coords, std::size_t dim) : dim_(dim) {
  const std::size_t n = coords.size() / dim;
  if (n > std::numeric_limits<std::uint32_t>::max() / 2) {
    throw std::length_error("point set too large for the spatial index");
  }
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), 0u);
  pts_.assign(coords.begin(), coords.end());
  nodes_.reserve(2 * (n / kLeafSize + 1));
  build(0, static_cast<std::uint32_t>(n));

  // Reorder coordinates so that each leaf bucket is contiguous.
  std::vector<double> reordered(pts_.size());
  for (std::size_t slot = 0; slot < n; ++slot) {
    std::copy_n(coords.data() + std::size_t(perm_[slot]) * dim_, dim_,
                reordered.data() + slot * dim_);
  }
  pts_ = std::move(reordered);
}

std::int32_t KdTree::build(std::uint32_t begin, std::uint32_t end) {
  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(Node{begin, end, -1, -1, 0, 0.0});
  if (end - begin <= kLeafSize) return id;

  // Split along the axis of largest extent, at the median.
  std::vector<double> lo(dim_, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim_, -std::numeric_limits<double>::infinity());
  for (std::uint32_t k = begin; k < end; ++k) {
    const double* p = pts_.data() + std::size_t(perm_[k]) * dim_;
    for (std::size_t a = 0; a < dim_; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }
  std::uint32_t axis = 0;
  for (std::size_t a = 1; a < dim_; ++a) {
    if (hi[a] - lo[a] > hi[axis] - lo[axis]) axis = static_cast<std::uint32_t>(a);
  }
  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(perm_.begin() + begin, perm_.begin() + mid, perm_.begin() + end,
                   [&](std::uint32_t x, std::uint32_t y) {
                     return pts_[std::size_t(x) * dim_ + axis] < pts_[std::size_t(y) * dim_ + axis];
                   });
  const double split = pts_[std::size_t(perm_[mid]) * dim_ + axis];

  const std::int32_t left = build(begin, mid);
  const std::int32_t right = build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  nodes_[id].axis = axis;
  nodes_[id].split = split;
  return id;
}

double KdTree::nearest_distance(std::span<const double> q, Norm norm) const {
  double best = std::numeric_limits<double>::infinity();
  search_nearest(0, q, norm, best);
  return best;
}

void KdTree::search_nearest(std::int32_t id, std::span<const double> q, Norm norm,
                            double& best) const {
  const Node& node = nodes_[id];
  if (node.left < 0) {
    for (std::uint32_t s = node.begin; s < node.end; ++s) {
      best = std::min(best, dist(at(s), q, dim_, norm));
    }
    return;
  }
  // Left child holds coordinates <= split, right child >= split.
  const double diff = q[node.axis] - node.split;
  const std::int32_t near = diff < 0 ? node.left : node.right;
  const std::int32_t far = diff < 0 ? node.right : node.left;
  search_nearest(near, q, norm, best);
  if (std::abs(diff) <= best) search_nearest(far, q, norm, best);
}

void KdTree::within(std::span<const double> q, double radius, Norm norm,
                    std::vector<std::size_t>& out) const {
  search_within(0, q, radius, norm, out);
}

void KdTree::search_within(std::int32_t id, std::span<const double> q, double radius, Norm norm,
                           std::vector<std::size_t>& out) const {
  const Node& node = nodes_[id];
  if (node.left < 0) {
    for (std::uint32_t s = node.begin; s < node.end; ++s) {
      if (dist(at(s), q, dim_, norm) <= radius) out.push_back(perm_[s]);
    }
    return;
  }
  const double diff = q[node.axis] - node.split;
  if (diff <= radius) search_within(node.left, q, radius, norm, out);
  if (-diff <= radius) search_within(node.right, q, radius, norm, out);
}

}  // namespace mfa::detail
