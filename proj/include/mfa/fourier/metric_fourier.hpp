#pragma once

#include <string_view>
#include <vector>

#include "mfa/geometry/point.hpp"
#include "mfa/geometry/point_set.hpp"
#include "mfa/svf/chain.hpp"
#include "mfa/svf/selection.hpp"

namespace mfa {

// Exact S_n c(x) for a chain function c on [-pi, pi], extended periodically:
// (1/pi) sum_i y_i (Phi_n(x - t_i) - Phi_n(x - t_{i+1})).
Point partial_sum_of_chain(const ChainFunction& c, int n, double x);

// Per-selection Gauss-Legendre tables of the selection continuation: nodes,
// weights and values on every cell of the selection's own partition. Built once
// and reused for all (n, x).
class FamilyQuadrature {
 public:
  explicit FamilyQuadrature(const SelectionFamily& family, int order = 8);

  std::size_t size() const { return tables_.size(); }
  std::size_t dim() const { return dim_; }
  double dedup_tol() const { return dedup_tol_; }

  // (1/pi) * integral of D_n(x - t) s(t) over [-pi, pi] for selection i.
  Point partial_sum(std::size_t i, int n, double x) const;

 private:
  struct Table {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> values;  // dim_ per node
  };
  std::vector<Table> tables_;
  std::size_t dim_ = 1;
  double dedup_tol_ = 1e-12;
};

enum class FourierMode {
  continuation_quadrature,  // integrate the selection continuation cell by cell
  chain_exact,              // exact sums of the piecewise-constant base chains
};

std::string_view to_string(FourierMode m);

struct FourierApproximant {
  double x = 0.0;
  int n = 1;
  PointSet value_set;
  std::size_t family_size = 0;
};

// S_nF(x) as the set of partial sums of the family's selections, deduplicated.
FourierApproximant metric_fourier(const SelectionFamily& family, int n, double x,
                                  FourierMode mode = FourierMode::continuation_quadrature);
FourierApproximant metric_fourier(const FamilyQuadrature& quadrature, int n, double x);

// A_F(x): midpoints of the one-sided limits of the family's selections.
PointSet limit_set_AF(const SelectionFamily& family, double x);

// One-sided limit sets {s(x - 0)} and {s(x + 0)} over the family.
PointSet left_limit_set(const SelectionFamily& family, double x);
PointSet right_limit_set(const SelectionFamily& family, double x);

}  // namespace mfa
