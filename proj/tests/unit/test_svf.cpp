#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mfa/geometry/operations.hpp"
#include "mfa/svf/analysis.hpp"
#include "mfa/svf/chain.hpp"
#include "mfa/svf/fixtures.hpp"
#include "mfa/svf/selection.hpp"

using namespace mfa;

namespace {

constexpr double kPi = std::numbers::pi;

PointSet S(std::initializer_list<double> v) { return PointSet::scalars(v); }

SetValuedFunction constant_svf(const PointSet& a, double lo = 0.0, double hi = 1.0) {
  return SetValuedFunction(lo, hi, [a](double) { return a; });
}

}  // namespace

TEST_CASE("partitions") {
  const Partition u = Partition::uniform(0.0, 1.0, 4);
  CHECK(u.size() == 5);
  CHECK(u.norm() == doctest::Approx(0.25));
  CHECK(u.cell_index(0.3) == 1);
  CHECK(u.cell_index(0.25) == 1);
  CHECK(u.cell_index(1.0) == 4);
  CHECK(u.node_index(0.5).value() == 2);
  CHECK_FALSE(u.node_index(0.4).has_value());

  const std::vector<double> forced{0.3, 2.0};
  const Partition d = Partition::dyadic(0.0, 1.0, 2, forced);
  CHECK(d.size() == 6);
  CHECK(d.refines(u));
  CHECK_FALSE(u.refines(d));
  CHECK(d.with_nodes(std::vector<double>{0.3 + 1e-15}).size() == 6);

  CHECK_THROWS(Partition(std::vector<double>{0.0}));
  CHECK_THROWS(Partition(std::vector<double>{0.0, 0.5, 0.5}));
}

TEST_CASE("set-valued functions and pieces") {
  const auto fx = fixtures::lines();
  CHECK(approx_equal(fx.f(-1.0), S({-0.25, 0.0, 0.25}), 1e-15));
  CHECK(approx_equal(fx.f(0.0), S({-1.0, -0.25, 0.0, 0.25, 1.0}), 1e-15));
  CHECK(approx_equal(fx.f(0.5), S({-0.5, 1.5}), 1e-15));
  CHECK(fx.f.is_jump(0.0));
  CHECK_THROWS_AS(fx.f(4.0), std::out_of_range);

  std::vector<SetPiece> pieces;
  pieces.push_back(SetPiece{0.0, 0.5, true, false, S({0.0}), std::nullopt, 0.0});
  pieces.push_back(SetPiece{0.5, 1.0, true, true, S({1.0}), Point{2.0}, 0.5});
  const auto g = piecewise_svf(0.0, 1.0, pieces);
  CHECK(g.jump_points().size() == 1);
  CHECK(g(0.75).point(0)[0] == doctest::Approx(1.5));
  CHECK(g(0.25).point(0)[0] == 0.0);
}

TEST_CASE("greedy chains") {
  const Partition chi = Partition::uniform(0.0, 1.0, 8);
  const auto c = greedy_chain(constant_svf(S({-1.0, 1.0})), chi, GraphPoint{0.5, Point{1.0}});
  for (const Point& y : c.values()) CHECK(y[0] == 1.0);

  const auto fx = fixtures::lines();
  const Partition p = Partition::dyadic(-kPi, kPi, 6, fx.f.jump_points());
  const auto lc = greedy_chain(fx.f, p, GraphPoint{0.0, Point{0.0}});
  CHECK(is_metric_chain(lc, fx.f));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double t = p.node(i);
    if (t > 0) CHECK(lc.value(i)[0] == doctest::Approx(-1.0 + t));
    if (t < 0) CHECK(lc.value(i)[0] == 0.0);
  }

  const auto quarter = greedy_chain(fx.f, p, GraphPoint{-kPi, Point{0.25}});
  for (std::size_t i = 0; i < p.size() && p.node(i) < 0; ++i) CHECK(quarter.value(i)[0] == 0.25);

  CHECK_THROWS(greedy_chain(fx.f, p, GraphPoint{0.01, Point{0.0}}));
  CHECK_THROWS(greedy_chain(fx.f, p, GraphPoint{0.0, Point{0.3}}));
}

TEST_CASE("chain functions") {
  const Partition chi(std::vector<double>{0.0, 0.5, 1.0});
  const ChainFunction c(MetricChain(chi, {Point{1.0}, Point{2.0}, Point{3.0}}));
  CHECK(c(0.0)[0] == 1.0);
  CHECK(c(0.25)[0] == 1.0);
  CHECK(c(0.5)[0] == 2.0);
  CHECK(c(1.0)[0] == 3.0);
  CHECK(evaluate_chain_function(c, 0.75)[0] == 2.0);
  CHECK(c.left_value(0.5)[0] == 1.0);
  const auto v = chain_cumulative_variation(c.chain());
  CHECK(v.back() == doctest::Approx(2.0));
}

TEST_CASE("a chain never varies more than its function") {
  const auto fx = fixtures::zero_and_shifted_sine();
  for (int level : {3, 5, 7}) {
    const Partition p = Partition::dyadic(-kPi, kPi, level);
    for (double y0 : {0.0, 2.0}) {
      const auto c = greedy_chain(fx.f, p, GraphPoint{-kPi, Point{y0}});
      const double vc = variation_on_partition(MetricPath::of_chain(ChainFunction(c)), p);
      const double vf = variation_on_partition(MetricPath::of_svf(fx.f), p);
      CHECK(vc <= vf + 1e-12);
    }
  }
}

TEST_CASE("selections") {
  const auto trig = fixtures::trig_singleton();
  const Partition probe = default_probe(trig.f, 8);
  const auto s = approximate_selection(trig.f, GraphPoint{0.0, trig.f(0.0).point(0)}, 8, probe);
  for (double t : probe.nodes()) CHECK(s(t)[0] == doctest::Approx(fixtures::trig_singleton_value(t)).epsilon(1e-12));

  const auto c = approximate_selection(constant_svf(S({-1.0, 1.0}), -kPi, kPi), GraphPoint{0.0, Point{-1.0}}, 6,
                                       Partition::uniform(-kPi, kPi, 64));
  CHECK(c.cauchy_defect() == 0.0);
}

TEST_CASE("the disc selection through the origin") {
  const auto fx = fixtures::balls(0.02);
  const Partition probe = default_probe(fx.f, 6);
  const auto s = approximate_selection(fx.f, GraphPoint{0.0, Point{0.0, 0.0}}, 6, probe);
  const double h = std::sqrt(2.0) / 2.0;
  CHECK(distance(s.left_limit(0.0), Point{-2.0 + h, 2.0 - h}) <= 0.04);
  CHECK(distance(s.right_limit(0.0), Point{2.0 - h, 2.0 - h}) <= 0.04);
  CHECK(s(0.0) == Point{0.0, 0.0});
}

TEST_CASE("selection families") {
  const auto trig = fixtures::trig_singleton();
  CHECK(selection_family(trig.f, 5, 0, 6).size() == 1);

  const auto pair = selection_family(constant_svf(S({-1.0, 1.0}), -kPi, kPi), 5, 0, 6);
  CHECK(pair.size() == 2);

  const auto fx = fixtures::lines();
  const auto fam = selection_family(fx.f, 9, 0, 8);
  bool found = false;
  for (const auto& sel : fam.selections) {
    bool match = true;
    for (double t : {-2.0, -0.5, -0.01}) match = match && std::abs(sel(t)[0]) < 1e-12;
    for (double t : {0.01, 0.3, 2.0}) match = match && std::abs(sel(t)[0] - (-1.0 + t)) < 1e-12;
    found = found || match;
  }
  CHECK(found);
}

TEST_CASE("the branching family realizes every metric chain") {
  std::vector<SetPiece> pieces;
  const std::vector<PointSet> values{S({0.0, 0.9}), S({1.0}), S({1.5, 2.0})};
  for (int i = 0; i < 3; ++i) {
    pieces.push_back(SetPiece{double(i), double(i + 1), true, i == 2, values[i], std::nullopt, 0.0});
  }
  const auto f = piecewise_svf(0.0, 3.0, pieces);
  const Partition chi(std::vector<double>{0.0, 1.0, 2.0, 3.0});
  const auto fam = branching_family(f, chi);
  std::vector<PointSet> node_sets;
  for (double x : chi.nodes()) node_sets.push_back(f(x));
  CHECK(fam.size() == enumerate_metric_chains(node_sets).size());
}

TEST_CASE("variation on partitions and total variation") {
  const auto sign = MetricPath::scalar([](double t) { return t < 0 ? -1.0 : 1.0; }, -1.0, 1.0, {0.0});
  CHECK(variation_on_partition(sign, Partition::uniform(-1.0, 1.0, 3)) == 2.0);
  CHECK(variation_on_partition(MetricPath::scalar([](double) { return 3.0; }, 0.0, 1.0),
                               Partition::uniform(0.0, 1.0, 7)) == 0.0);
  const auto mono = MetricPath::scalar([](double t) { return t * t * t; }, -1.0, 2.0);
  CHECK(total_variation(mono, 12).value == doctest::Approx(9.0));

  const auto fx = fixtures::lines();
  const auto est = total_variation(MetricPath::of_svf(fx.f), 12, fx.f.jump_points());
  // A lower bound; next to the jump one cell of width h loses about 2h.
  const double h = 2 * kPi / 4096;
  CHECK(est.value <= fx.total_variation() + 1e-12);
  CHECK(est.value >= fx.total_variation() - 2.5 * h);
}

TEST_CASE("local moduli") {
  const auto c = MetricPath::scalar([](double) { return 2.0; }, -1.0, 1.0);
  const auto zero = local_moduli(c, 0.0, 0.5);
  CHECK(zero.two_sided == 0.0);
  CHECK(zero.left_quasi == 0.0);

  const auto sign = MetricPath::scalar([](double t) { return t < 0 ? -1.0 : 1.0; }, -1.0, 1.0, {0.0});
  for (double d : {0.5, 0.1, 1e-3}) {
    const auto m = local_moduli(sign, 0.0, d);
    CHECK(m.left == 2.0);
    CHECK(m.right == 0.0);
    CHECK(m.left_quasi <= 1e-12);
    CHECK(m.right_quasi <= 1e-12);
  }

  const auto cube = MetricPath::scalar([](double t) { return t < 0 ? t : t + 1.0; }, -1.0, 1.0, {0.0});
  const auto m = local_moduli(cube, 0.0, 0.5);
  CHECK(m.left_quasi == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(m.right_quasi == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(m.left == doctest::Approx(1.5));
}

TEST_CASE("exact moduli of monotone and chain functions") {
  const auto fx = fixtures::unit_step();
  const auto m = monotone_moduli(fx.variation, 0.0, 0.5);
  CHECK(m.left == doctest::Approx(1.0));
  CHECK(m.left_quasi == 0.0);
  CHECK(m.right_quasi == 0.0);

  const Partition chi(std::vector<double>{-1.0, 0.0, 1.0});
  const ChainFunction c(MetricChain(chi, {Point{0.0}, Point{1.0}, Point{1.0}}));
  const auto cm = chain_moduli(c, 0.0, 0.5);
  CHECK(cm.left == 1.0);
  CHECK(cm.right == 0.0);
  const auto v = chain_variation_function(c);
  CHECK(v.value(0.0) == 1.0);
  CHECK(v.left_limit(0.0) == 0.0);
}
