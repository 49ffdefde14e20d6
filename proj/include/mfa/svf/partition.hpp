#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace mfa {

// Strictly increasing nodes a = x_0 < ... < x_n = b, n >= 1.
class Partition {
 public:
  explicit Partition(std::vector<double> nodes);

  static Partition uniform(double a, double b, std::size_t cells);

  // 2^level uniform cells plus the forced nodes that fall strictly inside (a, b).
  static Partition dyadic(double a, double b, int level, std::span<const double> forced = {});

  // Adds nodes; values closer than merge_tol to an existing node are dropped.
  Partition with_nodes(std::span<const double> extra, double merge_tol = 1e-13) const;

  std::span<const double> nodes() const { return nodes_; }
  double node(std::size_t i) const { return nodes_[i]; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t cells() const { return nodes_.size() - 1; }
  double a() const { return nodes_.front(); }
  double b() const { return nodes_.back(); }

  // Largest gap between neighbouring nodes.
  double norm() const { return norm_; }

  // Index i with x in [x_i, x_{i+1}); the last node maps to itself.
  std::size_t cell_index(double x) const;

  std::optional<std::size_t> node_index(double x, double tol = 0.0) const;

  // Whether every node of coarser is a node of this partition.
  bool refines(const Partition& coarser, double tol = 1e-13) const;

 private:
  std::vector<double> nodes_;
  double norm_ = 0.0;
};

}  // namespace mfa
