#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mfa/fourier/bounds.hpp"
#include "mfa/fourier/kernels.hpp"
#include "mfa/fourier/metric_fourier.hpp"
#include "mfa/fourier/periodic_function.hpp"
#include "mfa/geometry/operations.hpp"
#include "mfa/svf/fixtures.hpp"

using namespace mfa;

namespace {

constexpr double kPi = std::numbers::pi;

PointSet S(std::initializer_list<double> v) { return PointSet::scalars(v); }

}  // namespace

TEST_CASE("Dirichlet kernels") {
  CHECK(dirichlet(5, 0.0) == doctest::Approx(5.5));
  CHECK(dirichlet(1, kPi) == doctest::Approx(-0.5));
  CHECK(modified_dirichlet(7, 0.0) == doctest::Approx(7.0));
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    for (int n : {1, 4, 33}) {
      double sum = 0.5;
      for (int k = 1; k <= n; ++k) sum += std::cos(k * x);
      CHECK(dirichlet(n, x) == doctest::Approx(sum).epsilon(1e-10));
      CHECK(dirichlet(n, x) - modified_dirichlet(n, x) == doctest::Approx(0.5 * std::cos(n * x)).epsilon(1e-10));
    }
  }
  CHECK_THROWS(dirichlet(0, 1.0));
}

TEST_CASE("kernel antiderivatives") {
  for (int n : {1, 8, 100}) {
    CHECK(dirichlet_antiderivative(n, 0.0) == 0.0);
    CHECK(dirichlet_antiderivative(n, kPi) - dirichlet_antiderivative(n, -kPi) == doctest::Approx(kPi));
    CHECK(modified_dirichlet_antiderivative(n, kPi) - modified_dirichlet_antiderivative(n, -kPi) ==
          doctest::Approx(kPi));
  }
  const double h = 1e-5;
  const double fd = (dirichlet_antiderivative(8, 0.7 + h) - dirichlet_antiderivative(8, 0.7 - h)) / (2 * h);
  CHECK(std::abs(fd - dirichlet(8, 0.7)) < 1e-6);
  const double fdm =
      (modified_dirichlet_antiderivative(8, 0.7 + h) - modified_dirichlet_antiderivative(8, 0.7 - h)) / (2 * h);
  CHECK(std::abs(fdm - modified_dirichlet(8, 0.7)) < 1e-6);
}

TEST_CASE("Fourier coefficients") {
  const auto cos3 = fourier_coefficients([](double t) { return std::cos(3 * t); }, 6);
  for (int k = 0; k <= 6; ++k) {
    CHECK(std::abs(cos3.a[k] - (k == 3 ? 1.0 : 0.0)) < 1e-9);
    if (k > 0) CHECK(std::abs(cos3.b[k]) < 1e-9);
  }
  const auto sq = square_wave();
  const auto c = fourier_coefficients(sq, 5);
  CHECK(c.b[1] == doctest::Approx(4 / kPi));
  CHECK(std::abs(c.b[2]) < 1e-14);

  for (const auto& f : {square_wave(), sawtooth(), monotone_step()}) {
    const auto exact = fourier_coefficients(f, 12);
    const auto quad = fourier_coefficients(f.eval, 12, f.jumps);
    for (int k = 0; k <= 12; ++k) {
      CHECK(exact.a[k] == doctest::Approx(quad.a[k]).epsilon(1e-8).scale(1.0));
      if (k > 0) CHECK(exact.b[k] == doctest::Approx(quad.b[k]).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("periodic fixtures") {
  CHECK(square_wave().variation == doctest::Approx(4.0));
  CHECK(sawtooth().variation == doctest::Approx(4 * kPi));
  CHECK(monotone_step().variation == doctest::Approx(1.2 * kPi + 2.0));
  const auto saw = sawtooth(1.0);
  CHECK(saw.midpoint(1.0) == doctest::Approx(0.0).scale(1.0));
  CHECK(saw.jump_at(1.0) == doctest::Approx(2 * kPi));
  CHECK(square_wave().midpoint(0.0) == 0.0);
  const auto [l, r] = periodic_quasi_moduli(monotone_step(), 0.5, 0.2);
  CHECK(l == doctest::Approx(0.06));
  CHECK(r == doctest::Approx(0.06));
}

TEST_CASE("classical partial sums") {
  const auto trig = [](double t) { return 0.5 + std::cos(t) - 0.3 * std::sin(3 * t); };
  const auto c = fourier_coefficients(trig, 5);
  for (double x : {-2.0, 0.1, 3.0}) CHECK(classical_partial_sum(c, 3, x) == doctest::Approx(trig(x)).epsilon(1e-9));
  for (int n : {1, 7, 64}) CHECK(std::abs(classical_partial_sum(square_wave(), n, 0.0)) < 1e-12);
}

TEST_CASE("partial sums of chain functions") {
  const Partition chi = Partition::uniform(-kPi, kPi, 16);
  const ChainFunction constant(MetricChain(chi, std::vector<Point>(17, Point{2.0, -1.0})));
  for (int n : {1, 5, 40}) {
    for (double x : {-3.0, 0.0, 1.3}) {
      const Point s = partial_sum_of_chain(constant, n, x);
      CHECK(s[0] == doctest::Approx(2.0));
      CHECK(s[1] == doctest::Approx(-1.0));
    }
  }
  const Partition half(std::vector<double>{-kPi, 0.0, kPi});
  const ChainFunction step(MetricChain(half, {Point{-1.0}, Point{1.0}, Point{1.0}}));
  for (int n : {3, 17}) {
    for (double x : {0.4, 2.0}) {
      CHECK(partial_sum_of_chain(step, n, x)[0] ==
            doctest::Approx(classical_partial_sum(square_wave(), n, x)).epsilon(1e-10));
    }
  }
  const Partition grid = Partition::uniform(-kPi, kPi, 4096);
  std::vector<Point> cosines;
  for (double t : grid.nodes()) cosines.push_back(Point{std::cos(t)});
  const ChainFunction fine(MetricChain(grid, cosines));
  CHECK(std::abs(partial_sum_of_chain(fine, 4, 0.9)[0] - std::cos(0.9)) < 2e-3);
}

TEST_CASE("metric Fourier approximants") {
  const auto pm = SetValuedFunction(-kPi, kPi, [](double) { return S({-1.0, 1.0}); });
  const auto fam = selection_family(pm, 5, 0, 6);
  for (int n : {1, 16}) {
    for (double x : {-1.0, 2.5}) {
      CHECK(approx_equal(metric_fourier(fam, n, x).value_set, S({-1.0, 1.0}), 1e-9));
      CHECK(approx_equal(metric_fourier(fam, n, x, FourierMode::chain_exact).value_set, S({-1.0, 1.0}), 1e-9));
    }
  }

  const auto trig = fixtures::trig_singleton();
  const FamilyQuadrature quad(selection_family(trig.f, 5, 0, 8));
  CHECK(quad.size() == 1);
  for (double x : {-2.0, 0.3}) {
    const auto r = metric_fourier(quad, 8, x);
    REQUIRE(r.value_set.size() == 1);
    CHECK(r.value_set.point(0)[0] == doctest::Approx(fixtures::trig_singleton_value(x)).epsilon(1e-9));
  }
  CHECK(to_string(FourierMode::chain_exact) == "chain_exact");
}

TEST_CASE("limit sets") {
  const auto lines = fixtures::lines();
  const auto fam = selection_family(lines.f, 9, 0, 8);
  const PointSet af = limit_set_AF(fam, 0.0);
  CHECK(af.distance_to(Point{0.5}) >= 0.125 - 1e-9);
  CHECK(approx_equal(left_limit_set(fam, 0.0), S({-0.25, 0.0, 0.25}), 1e-9));

  const auto trig = fixtures::trig_singleton();
  const auto tf = selection_family(trig.f, 5, 0, 8);
  CHECK(approx_equal(limit_set_AF(tf, 1.0), trig.f(1.0), 1e-6));
}

TEST_CASE("bound formulas") {
  const ModulusBound zero = [](double) { return 0.0; };
  CHECK(djordan_bound_rhs(BoundParams{2.0, kPi, 2.0, zero}, 10) == doctest::Approx(4 / (10 * kPi)));
  CHECK(djordan_bound_rhs(BoundParams{0.0, 0.5, 2.0, [](double d) { return d; }}, 10) == doctest::Approx(8.0));
  const double d = kPi / 4;
  const double pinned = (4 / (kPi * 100)) * (1 + 6 / std::tan(d / 2)) + 16 * (d / 10);
  CHECK(djordan_bound_rhs(BoundParams{2.0, d, 2.0, [](double t) { return t / 10; }}, 100) ==
        doctest::Approx(pinned));
  CHECK_THROWS(djordan_bound_rhs(BoundParams{2.0, 4.0, 2.0, zero}, 10));
  CHECK_THROWS(djordan_bound_rhs(BoundParams{2.0, 0.0, 2.0, zero}, 10));

  const auto grid = delta_grid();
  CHECK(grid.back() == kPi);
  CHECK(grid.size() == 32);
  double last = 1e300;
  for (int n : {8, 16, 32}) {
    const double b = svf_bound_rhs(2.0, n, 1.0, zero, 16.0);
    CHECK(b <= last);
    last = b;
  }
  CHECK(default_K(Norm::l1, 2) == 32.0);
  CHECK(default_K(Norm::l2, 4) == 32.0);
  CHECK(default_K(Norm::linf, 3) == 16.0);
  CHECK(svf_delta0(0.0) == doctest::Approx(kPi));

  const auto cal = calibrate_K({1.0, 3.0, 0.5}, {1.0, 1.0, 1.0});
  CHECK(cal.K == 3.0);
  CHECK(cal.samples == 3);
}

TEST_CASE("class membership") {
  const auto zero = [](double) { return 0.0; };
  const auto flat = smooth_periodic("flat", [](double) { return 1.0; }, 0.0);
  CHECK(class_membership(flat, 0.0, 0.0, zero).member);

  // At delta = pi the window end carries the jump of the periodic extension.
  const auto sq = square_wave();
  const auto inside = delta_grid(3.0);
  CHECK(class_membership(sq, 4.0, 0.0, zero, inside).member);
  CHECK_FALSE(class_membership(sq, 3.9, 0.0, zero, inside).member);
  CHECK_FALSE(class_membership(sq, 4.0, 0.0, zero).member);

  // f(t) = t: the periodic extension jumps by 2 pi at +-pi, so B counts 4 pi and
  // windows stay inside (-pi, pi).
  const auto ramp = piecewise_linear("ramp", {}, {{1.0, 0.0}});
  const auto id = [](double d) { return d; };
  CHECK(class_membership(ramp, 4 * kPi, 0.0, id, inside).member);
  CHECK_FALSE(class_membership(ramp, 2 * kPi, 0.0, id, inside).member);
  CHECK_FALSE(class_membership(ramp, 4 * kPi, 0.0, [](double d) { return 0.5 * d; }, inside).member);
}
