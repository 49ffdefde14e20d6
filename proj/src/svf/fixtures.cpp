#include "mfa/svf/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "mfa/geometry/nets.hpp"
#include "mfa/geometry/operations.hpp"

namespace mfa::fixtures {

namespace {

constexpr double kPi = std::numbers::pi;

MonotoneFunction zero_variation() {
  auto z = [](double) { return 0.0; };
  return MonotoneFunction{-kPi, kPi, z, z, z};
}

// Variation function with one jump structure at x0: zero left of x0, mid at
// x0 and hi + slope * (t - x0) right of x0.
MonotoneFunction step_variation(double x0, double mid, double hi, double slope) {
  MonotoneFunction v;
  v.a = -kPi;
  v.b = kPi;
  v.value = [=](double t) { return t < x0 ? 0.0 : (t == x0 ? mid : hi + slope * (t - x0)); };
  v.left_limit = [=](double t) { return t <= x0 ? 0.0 : hi + slope * (t - x0); };
  v.right_limit = [=](double t) { return t < x0 ? 0.0 : hi + slope * (t - x0); };
  return v;
}

// Integral of |cos| from 0 to u; odd in u.
double abs_cos_integral(double u) {
  const double s = u < 0 ? -1.0 : 1.0;
  u = std::abs(u);
  const double periods = std::floor(u / kPi);
  double r = u - periods * kPi;
  const double part = r <= kPi / 2 ? std::sin(r) : 2.0 - std::sin(r);
  return s * (2.0 * periods + part);
}

// Variation function of t -> sin t on [-pi, pi].
MonotoneFunction sine_variation() {
  auto v = [](double t) { return abs_cos_integral(t) + 2.0; };
  return MonotoneFunction{-kPi, kPi, v, v, v};
}

}  // namespace

SvfFixture lines(double x0) {
  if (!(x0 > -kPi && x0 < kPi)) throw std::invalid_argument("jump must lie inside (-pi, pi)");
  std::vector<SetPiece> pieces;
  pieces.push_back({-kPi, x0, true, false, PointSet::scalars({-0.25, 0.0, 0.25}), std::nullopt, 0.0});
  pieces.push_back({x0, x0, true, true, PointSet::scalars({-1.0, -0.25, 0.0, 0.25, 1.0}), std::nullopt, 0.0});
  pieces.push_back({x0, kPi, false, true, PointSet::scalars({-1.0, 1.0}), Point{1.0}, x0});
  const double total = 1.75 + (kPi - x0);
  return SvfFixture{"lines", piecewise_svf(-kPi, kPi, std::move(pieces), total), step_variation(x0, 0.75, 1.75, 1.0),
                    1.0 + (kPi - x0)};
}

SvfFixture balls(double eps, double x0) {
  const PointSet left = disc_net(Point{-2.0, 2.0}, 1.0, eps);
  const PointSet right = disc_net(Point{2.0, 2.0}, 1.0, eps);
  const PointSet origin = PointSet::singleton(Point{0.0, 0.0});
  const PointSet parts[] = {left, origin, right};
  const PointSet middle = set_union(parts);

  std::vector<SetPiece> pieces;
  pieces.push_back({-kPi, x0, true, false, left, std::nullopt, 0.0});
  pieces.push_back({x0, x0, true, true, middle, std::nullopt, 0.0});
  pieces.push_back({x0, kPi, false, true, right, std::nullopt, 0.0});

  // The two jump heights are Hausdorff distances between large nets; compute
  // them once, when the variation function is first used.
  struct Lazy {
    Lazy(PointSet l_, PointSet m_, PointSet r_) : l(std::move(l_)), m(std::move(m_)), r(std::move(r_)) {}
    PointSet l, m, r;
    std::once_flag once;
    double h1 = 0.0, h2 = 0.0;
    void ensure() {
      std::call_once(once, [this] {
        h1 = hausdorff(l, m);
        h2 = hausdorff(m, r);
      });
    }
  };
  auto lazy = std::make_shared<Lazy>(left, middle, right);
  MonotoneFunction v;
  v.a = -kPi;
  v.b = kPi;
  v.value = [lazy, x0](double t) {
    if (t < x0) return 0.0;
    lazy->ensure();
    return t == x0 ? lazy->h1 : lazy->h1 + lazy->h2;
  };
  v.left_limit = [lazy, x0](double t) {
    if (t <= x0) return 0.0;
    lazy->ensure();
    return lazy->h1 + lazy->h2;
  };
  v.right_limit = [lazy, x0](double t) {
    if (t < x0) return 0.0;
    lazy->ensure();
    return lazy->h1 + lazy->h2;
  };
  return SvfFixture{"balls", piecewise_svf(-kPi, kPi, std::move(pieces)), v, set_norm(right)};
}

SvfFixture constant_set(const PointSet& a) {
  SetValuedFunction f(-kPi, kPi, [a](double) { return a; }, {}, 0.0);
  return SvfFixture{"constant", f, zero_variation(), set_norm(a)};
}

SvfFixture two_branch_sine() {
  SetValuedFunction f(-kPi, kPi, [](double t) { return PointSet::scalars({std::sin(t), std::sin(t) + 2.0}); }, {},
                      4.0);
  return SvfFixture{"two-branch-sine", f, sine_variation(), 3.0};
}

SvfFixture zero_and_shifted_sine() {
  SetValuedFunction f(-kPi, kPi, [](double t) { return PointSet::scalars({0.0, 2.0 + std::sin(t)}); }, {}, 4.0);
  return SvfFixture{"zero-and-shifted-sine", f, sine_variation(), 3.0};
}

double trig_singleton_value(double t) { return 0.5 + std::cos(t) - 0.3 * std::sin(3.0 * t); }

SvfFixture trig_singleton() {
  auto f = [](double t) { return trig_singleton_value(t); };
  auto df = [](double t) { return -std::sin(t) - 0.9 * std::cos(3.0 * t); };
  // Split [-pi, pi] at the zeros of f', located by bisection, so that the
  // variation is a sum of monotone increments.
  std::vector<double> turns{-kPi};
  const int grid = 4096;
  for (int i = 0; i < grid; ++i) {
    double lo = -kPi + 2 * kPi * i / grid, hi = -kPi + 2 * kPi * (i + 1) / grid;
    if (df(lo) == 0.0) {
      if (lo > -kPi) turns.push_back(lo);
      continue;
    }
    if ((df(lo) < 0) == (df(hi) < 0)) continue;
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      if ((df(mid) < 0) == (df(lo) < 0)) lo = mid; else hi = mid;
    }
    turns.push_back(0.5 * (lo + hi));
  }
  turns.push_back(kPi);
  std::vector<double> cum(turns.size(), 0.0);
  for (std::size_t i = 1; i < turns.size(); ++i) cum[i] = cum[i - 1] + std::abs(f(turns[i]) - f(turns[i - 1]));
  auto shared = std::make_shared<std::pair<std::vector<double>, std::vector<double>>>(turns, cum);
  auto v = [shared, f](double t) {
    const auto& [x, c] = *shared;
    std::size_t i = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), t) - x.begin());
    i = std::clamp<std::size_t>(i, 1, x.size() - 1) - 1;
    return c[i] + std::abs(f(t) - f(x[i]));
  };
  double sup = 0.0;
  for (int i = 0; i <= 1 << 16; ++i) sup = std::max(sup, std::abs(f(-kPi + 2 * kPi * i / (1 << 16))));
  SetValuedFunction fn(-kPi, kPi, [f](double t) { return PointSet::scalars({f(t)}); }, {}, cum.back());
  return SvfFixture{"trig-singleton", fn, MonotoneFunction{-kPi, kPi, v, v, v}, sup};
}

SvfFixture unit_step(double x0) {
  std::vector<SetPiece> pieces;
  pieces.push_back({-kPi, x0, true, false, PointSet::scalars({0.0}), std::nullopt, 0.0});
  pieces.push_back({x0, x0, true, true, PointSet::scalars({0.0, 1.0}), std::nullopt, 0.0});
  pieces.push_back({x0, kPi, false, true, PointSet::scalars({1.0}), std::nullopt, 0.0});
  return SvfFixture{"unit-step", piecewise_svf(-kPi, kPi, std::move(pieces), 2.0), step_variation(x0, 1.0, 2.0, 0.0),
                    1.0};
}

std::vector<std::string> names() {
  return {"lines", "balls", "constant", "two-branch-sine", "zero-and-shifted-sine", "trig-singleton", "unit-step"};
}

SvfFixture by_name(std::string_view name) {
  if (name == "lines") return lines();
  if (name == "balls") return balls(0.05);
  if (name == "constant") return constant_set(PointSet::scalars({-1.0, 1.0}));
  if (name == "two-branch-sine") return two_branch_sine();
  if (name == "zero-and-shifted-sine") return zero_and_shifted_sine();
  if (name == "trig-singleton") return trig_singleton();
  if (name == "unit-step") return unit_step();
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace mfa::fixtures
