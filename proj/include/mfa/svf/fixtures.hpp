#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mfa/geometry/point_set.hpp"
#include "mfa/svf/analysis.hpp"
#include "mfa/svf/set_valued_function.hpp"

namespace mfa::fixtures {

// A set-valued function on [-pi, pi] together with exactly known data.
struct SvfFixture {
  std::string name;
  SetValuedFunction f;
  MonotoneFunction variation;  // the variation function v_F
  double sup_norm = 0.0;       // sup over x of max |y|, y in F(x)

  double total_variation() const { return variation.value(f.b()); }
};

// F(t) = {-1/4, 0, 1/4} for t < x0, {-1, -1/4, 0, 1/4, 1} at x0 and
// {-1 + (t - x0), 1 + (t - x0)} for t > x0.
SvfFixture lines(double x0 = 0.0);

// Unit discs centred at (-2, 2) and (2, 2), given as eps-nets: F is the left
// disc for t < x0, the right disc for t > x0, and both discs plus the origin at
// x0. The variation function is computed from the nets on first use.
SvfFixture balls(double eps, double x0 = 0.0);

SvfFixture constant_set(const PointSet& a);

// {sin t, sin t + 2}.
SvfFixture two_branch_sine();

// {0, 2 + sin t}.
SvfFixture zero_and_shifted_sine();

// {1/2 + cos t - 0.3 sin 3t}, a trigonometric polynomial of degree 3.
SvfFixture trig_singleton();
double trig_singleton_value(double t);
inline constexpr int kTrigSingletonDegree = 3;

// {0} for t < x0, {0, 1} at x0, {1} for t > x0.
SvfFixture unit_step(double x0 = 0.0);

// Names accepted by by_name: "lines", "balls" (eps 0.05), "constant",
// "two-branch-sine", "zero-and-shifted-sine", "trig-singleton", "unit-step".
std::vector<std::string> names();
SvfFixture by_name(std::string_view name);

}  // namespace mfa::fixtures
