#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mfa/geometry/point.hpp"
#include "mfa/geometry/point_set.hpp"

namespace mfa {

// A set-valued function F : [a, b] -> finite subsets of R^d.
//
// The evaluator must be deterministic and thread-safe. Declared jump points are
// forced into every partition used for chains and selections.
class SetValuedFunction {
 public:
  using Evaluator = std::function<PointSet(double)>;

  SetValuedFunction(double a, double b, Evaluator eval, std::vector<double> jump_points = {},
                    std::optional<double> variation_hint = std::nullopt);

  double a() const { return a_; }
  double b() const { return b_; }
  std::size_t dim() const { return dim_; }

  // Throws std::out_of_range outside [a, b].
  PointSet operator()(double x) const;

  std::span<const double> jump_points() const { return jumps_; }
  std::optional<double> variation_hint() const { return variation_hint_; }

  bool is_jump(double x, double tol = 1e-12) const;

 private:
  double a_;
  double b_;
  Evaluator eval_;
  std::vector<double> jumps_;
  std::optional<double> variation_hint_;
  std::size_t dim_ = 0;
};

// One piece of a piecewise-defined set-valued function: on the interval from
// lo to hi the value is base translated by velocity * (x - anchor).
struct SetPiece {
  double lo = 0.0;
  double hi = 0.0;
  bool include_lo = true;
  bool include_hi = false;
  PointSet base;
  std::optional<Point> velocity;
  double anchor = 0.0;
};

// Evaluates the first piece whose interval contains x. Piece boundaries strictly
// inside (a, b) are declared as jump points.
SetValuedFunction piecewise_svf(double a, double b, std::vector<SetPiece> pieces,
                                std::optional<double> variation_hint = std::nullopt);

}  // namespace mfa
