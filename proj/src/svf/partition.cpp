#include "mfa/svf/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfa {

Partition::Partition(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw std::invalid_argument("a partition needs at least two nodes");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i])) throw std::invalid_argument("partition nodes must be finite");
    if (i > 0) {
      if (!(nodes_[i] > nodes_[i - 1])) throw std::invalid_argument("partition nodes must be strictly increasing");
      norm_ = std::max(norm_, nodes_[i] - nodes_[i - 1]);
    }
  }
}

Partition Partition::uniform(double a, double b, std::size_t cells) {
  if (cells == 0) throw std::invalid_argument("a partition needs at least one cell");
  if (!(b > a)) throw std::invalid_argument("partition interval must satisfy a < b");
  std::vector<double> x(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(cells);
  }
  x.back() = b;
  return Partition(std::move(x));
}

Partition Partition::dyadic(double a, double b, int level, std::span<const double> forced) {
  if (level < 0 || level > 30) throw std::invalid_argument("dyadic level must lie in [0, 30]");
  const Partition base = uniform(a, b, std::size_t{1} << level);
  if (forced.empty()) return base;
  return base.with_nodes(forced);
}

Partition Partition::with_nodes(std::span<const double> extra, double merge_tol) const {
  // Added nodes win over nearby existing ones so that declared points (jumps,
  // seeds) are represented exactly; the end points never move.
  std::vector<std::pair<double, bool>> x;
  x.reserve(nodes_.size() + extra.size());
  for (double v : nodes_) x.emplace_back(v, false);
  for (double e : extra) {
    if (e > a() && e < b()) x.emplace_back(e, true);
  }
  std::sort(x.begin(), x.end());
  std::vector<std::pair<double, bool>> out;
  out.reserve(x.size());
  for (const auto& item : x) {
    if (!out.empty() && item.first - out.back().first <= merge_tol) {
      const bool back_is_end = out.size() == 1;
      if (item.second && !out.back().second && !back_is_end) out.back() = item;
      continue;
    }
    out.push_back(item);
  }
  if (out.back().first != b()) {
    if (b() - out.back().first <= merge_tol) out.back() = {b(), false};
    else out.emplace_back(b(), false);
  }
  std::vector<double> v;
  v.reserve(out.size());
  for (const auto& item : out) v.push_back(item.first);
  return Partition(std::move(v));
}

std::size_t Partition::cell_index(double x) const {
  if (!(x >= a() && x <= b())) throw std::out_of_range("point outside the partition interval");
  if (x == b()) return nodes_.size() - 1;
  const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  return static_cast<std::size_t>(it - nodes_.begin()) - 1;
}

std::optional<std::size_t> Partition::node_index(double x, double tol) const {
  const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x - tol);
  if (it != nodes_.end() && *it <= x + tol) return static_cast<std::size_t>(it - nodes_.begin());
  return std::nullopt;
}

bool Partition::refines(const Partition& coarser, double tol) const {
  for (double v : coarser.nodes()) {
    if (!node_index(v, tol)) return false;
  }
  return true;
}

}  // namespace mfa
