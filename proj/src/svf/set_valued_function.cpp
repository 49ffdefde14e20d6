#include "mfa/svf/set_valued_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mfa {

SetValuedFunction::SetValuedFunction(double a, double b, Evaluator eval, std::vector<double> jump_points,
                                     std::optional<double> variation_hint)
    : a_(a), b_(b), eval_(std::move(eval)), jumps_(std::move(jump_points)), variation_hint_(variation_hint) {
  if (!(b_ > a_) || !std::isfinite(a_) || !std::isfinite(b_)) {
    throw std::invalid_argument("set-valued function domain must be a finite interval with a < b");
  }
  if (!eval_) throw std::invalid_argument("set-valued function needs an evaluator");
  std::sort(jumps_.begin(), jumps_.end());
  jumps_.erase(std::unique(jumps_.begin(), jumps_.end()), jumps_.end());
  for (double j : jumps_) {
    if (!(j >= a_ && j <= b_)) throw std::invalid_argument("jump point outside the domain");
  }
  dim_ = eval_(a_).dim();
}

PointSet SetValuedFunction::operator()(double x) const {
  if (!(x >= a_ && x <= b_)) throw std::out_of_range("set-valued function evaluated outside its domain");
  return eval_(x);
}

bool SetValuedFunction::is_jump(double x, double tol) const {
  return std::any_of(jumps_.begin(), jumps_.end(), [&](double j) { return std::abs(j - x) <= tol; });
}

SetValuedFunction piecewise_svf(double a, double b, std::vector<SetPiece> pieces,
                                std::optional<double> variation_hint) {
  if (pieces.empty()) throw std::invalid_argument("piecewise set-valued function needs pieces");
  const std::size_t d = pieces.front().base.dim();
  std::vector<double> jumps;
  for (const SetPiece& p : pieces) {
    if (p.base.dim() != d) throw std::invalid_argument("pieces differ in dimension");
    if (p.velocity && p.velocity->dim() != d) throw std::invalid_argument("piece velocity dimension mismatch");
    if (p.lo > p.hi) throw std::invalid_argument("piece interval must satisfy lo <= hi");
    for (double e : {p.lo, p.hi}) {
      if (e > a && e < b) jumps.push_back(e);
    }
  }
  auto eval = [pieces = std::move(pieces)](double x) -> PointSet {
    for (const SetPiece& p : pieces) {
      const bool above = p.include_lo ? x >= p.lo : x > p.lo;
      const bool below = p.include_hi ? x <= p.hi : x < p.hi;
      if (!(above && below)) continue;
      if (!p.velocity) return p.base;
      return p.base.translated(*p.velocity * (x - p.anchor));
    }
    throw std::out_of_range("no piece covers the evaluation point");
  };
  return SetValuedFunction(a, b, std::move(eval), std::move(jumps), variation_hint);
}

}  // namespace mfa
