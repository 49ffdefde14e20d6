#include <cmath>
#include <random>

#include "doctest.h"
#include "mfa/geometry/convex_hull.hpp"
#include "mfa/geometry/nets.hpp"
#include "mfa/geometry/operations.hpp"
#include "oracle.hpp"

using namespace mfa;

namespace {

PointSet S(std::initializer_list<double> v) { return PointSet::scalars(v); }

oracle::Set to_oracle(const PointSet& s) {
  oracle::Set out;
  for (std::size_t i = 0; i < s.size(); ++i) out.emplace_back(s.coords(i).begin(), s.coords(i).end());
  return out;
}

}  // namespace

TEST_CASE("point set construction sorts and merges near duplicates") {
  const PointSet s = S({1.0, -1.0, 1.0 + 1e-14, 0.5});
  CHECK(s.size() == 3);
  CHECK(s.point(0)[0] == -1.0);
  CHECK(s.point(2)[0] == 1.0);
  CHECK_THROWS(PointSet(std::vector<Point>{}));
  CHECK_THROWS(PointSet({Point{0.0}, Point{0.0, 1.0}}));
}

TEST_CASE("distance from a point to a set") {
  auto r = dist_point_set(Point{0.0}, S({0.0}));
  CHECK(r.value == 0.0);
  CHECK(r.witnesses.size() == 1);

  r = dist_point_set(Point{0.3}, S({-1.0, 1.0}));
  CHECK(r.value == doctest::Approx(0.7));
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses.point(0)[0] == 1.0);

  r = dist_point_set(Point{0.0}, S({-1.0, 1.0}));
  CHECK(r.witnesses.size() == 2);

  const PointSet disc = disc_net(Point{-2.0, 2.0}, 1.0, 1e-2);
  r = dist_point_set(Point{0.0, 0.0}, disc);
  const double h = std::sqrt(2.0) / 2.0;
  CHECK(r.value == doctest::Approx(2.0 * std::sqrt(2.0) - 1.0).epsilon(1e-4));
  CHECK(distance(r.witnesses.point(0), Point{-2.0 + h, 2.0 - h}) <= 2e-2);
}

TEST_CASE("Hausdorff distance and set norm") {
  const PointSet a = S({-0.25, 0.0, 0.25});
  CHECK(hausdorff(a, a) == 0.0);
  CHECK(hausdorff(S({0.0}), S({1.0})) == 1.0);
  CHECK(hausdorff(a, S({-1.0, 1.0})) == doctest::Approx(1.0));
  CHECK(directed_hausdorff(a, S({-1.0, 1.0})) == doctest::Approx(1.0));
  CHECK(set_norm(S({0.0})) == 0.0);
  CHECK(set_norm(S({-1.0, 1.0})) == 1.0);
  CHECK(set_norm(PointSet{Point{3.0, 4.0}}) == doctest::Approx(5.0));
  CHECK(set_norm(PointSet{Point{3.0, 4.0}}, Norm::l1) == doctest::Approx(7.0));
  CHECK(set_norm(PointSet{Point{3.0, 4.0}}, Norm::linf) == doctest::Approx(4.0));
}

TEST_CASE("Hausdorff distance of the three-point and two-point sets") {
  // The point 0 is at distance 1 from both -1 and 1; every other directed distance is 3/4.
  CHECK(hausdorff(S({-0.25, 0.0, 0.25}), S({-1.0, 1.0})) ==
        doctest::Approx(oracle::hausdorff({{-0.25}, {0.0}, {0.25}}, {{-1.0}, {1.0}})));
}

TEST_CASE("metric pairs include both projections of a tie") {
  const auto pairs = metric_pairs(S({-0.25, 0.0, 0.25}), S({-1.0, 1.0}));
  CHECK(pairs.size() == 4);
  for (auto [x, y] : std::vector<std::pair<double, double>>{{-0.25, -1.0}, {0.25, 1.0}, {0.0, -1.0}, {0.0, 1.0}}) {
    bool found = false;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [p, q] = pairs.pair(k);
      found = found || (p[0] == x && q[0] == y);
    }
    CHECK(found);
  }
  const auto single = metric_pairs(PointSet{Point{1.0, 2.0}}, PointSet{Point{1.0, 2.0}});
  CHECK(single.size() == 1);
}

TEST_CASE("the disc projections do not form a metric pair") {
  const double h = std::sqrt(2.0) / 2.0;
  const PointSet left = disc_net(Point{-2.0, 2.0}, 1.0, 0.02);
  const PointSet right = disc_net(Point{2.0, 2.0}, 1.0, 0.02);
  const Point p = left.point(left.project_index(Point{-2.0 + h, 2.0 - h}.coords(), Metric{}));
  const Point q = right.point(right.project_index(Point{2.0 - h, 2.0 - h}.coords(), Metric{}));
  CHECK_FALSE(is_metric_pair(p, q, left, right));
  const auto pairs = metric_pairs(left, right);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs.pair(k);
    CHECK_FALSE((a == p && b == q));
  }
}

TEST_CASE("is_metric_pair agrees with metric_pairs and the oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-8, 8), count(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = trial % 2 + 1;
    auto random_set = [&] {
      std::vector<Point> pts;
      const int n = count(rng);
      for (int i = 0; i < n; ++i) {
        std::vector<double> c(d);
        for (double& v : c) v = coord(rng) / 4.0;
        pts.emplace_back(c);
      }
      return PointSet(pts);
    };
    const PointSet a = random_set(), b = random_set();
    const auto pairs = metric_pairs(a, b);
    const auto oa = to_oracle(a), ob = to_oracle(b);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        const bool lib = is_metric_pair(a.point(i), b.point(j), a, b);
        CHECK(lib == pairs.contains(i, j));
        CHECK(lib == oracle::metric_pair(oa[i], ob[j], oa, ob, 1e-9));
      }
    }
  }
}

TEST_CASE("metric average") {
  const PointSet a = S({-0.25, 0.0, 0.25}), b = S({-1.0, 1.0});
  CHECK(approx_equal(metric_average(0.0, a, b), a, 1e-12));
  CHECK(approx_equal(metric_average(1.0, a, b), b, 1e-12));
  CHECK(approx_equal(metric_average(0.5, a, b), S({-0.625, -0.5, 0.5, 0.625}), 1e-12));
  CHECK(approx_equal(metric_average(0.5, S({0.0}), S({2.0})), S({1.0}), 1e-12));
}

TEST_CASE("metric chains") {
  std::vector<PointSet> sets{PointSet{Point{1.0, 1.0}}, PointSet{Point{2.0, 0.0}}};
  auto chains = enumerate_metric_chains(sets);
  CHECK(chains.size() == 1);

  sets = {S({0.0}), S({-1.0, 1.0}), S({0.0})};
  chains = enumerate_metric_chains(sets);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0] == ChainIndices{0, 0, 0});
  CHECK(chains[1] == ChainIndices{0, 1, 0});

  sets = {S({-0.25, 0.0, 0.25}), S({-1.0, 1.0})};
  CHECK(enumerate_metric_chains(sets).size() == 4);
  CHECK(count_metric_chains(sets) == 4);
}

TEST_CASE("chains that no greedy projection finds are still enumerated") {
  // A1 is a singleton, so (0, 1, 2) is a chain, yet greedy projection from any
  // seed ends at 0.9 on the left or at 1.5 on the right.
  const std::vector<PointSet> sets{S({0.0, 0.9}), S({1.0}), S({1.5, 2.0})};
  const auto chains = enumerate_metric_chains(sets);
  bool found = false;
  for (const auto& c : chains) found = found || c == ChainIndices{0, 0, 1};
  CHECK(found);
  CHECK(chains.size() == 4);
}

TEST_CASE("chain enumeration refuses to explode") {
  std::vector<PointSet> sets(12, S({0.0, 1.0, 2.0}));
  // Identical consecutive sets only pair a point with itself.
  CHECK(count_metric_chains(sets) == 3);
  Metric m;
  m.chain_limit = 10;
  std::vector<PointSet> wide;
  for (int i = 0; i < 8; ++i) wide.push_back(i % 2 ? S({-1.0, 1.0}) : S({0.0}));
  CHECK(count_metric_chains(wide, m) == 11);
  CHECK_THROWS_AS(enumerate_metric_chains(wide, m), ChainExplosionError);
}

TEST_CASE("metric linear combination") {
  const PointSet a = S({-0.25, 0.0, 0.25}), b = S({-1.0, 1.0});
  const std::vector<double> one{1.0}, half{0.5, 0.5}, unit{1.0, 1.0};
  CHECK(approx_equal(metric_linear_combination(one, std::vector<PointSet>{a}), a, 1e-12));
  CHECK(approx_equal(metric_linear_combination(half, std::vector<PointSet>{a, b}), S({-0.625, -0.5, 0.5, 0.625}),
                     1e-12));
  CHECK(approx_equal(metric_linear_combination(unit, std::vector<PointSet>{S({0.0}), b}), S({-1.0, 1.0}), 1e-12));
  CHECK_THROWS(metric_linear_combination(unit, std::vector<PointSet>{a}));
}

TEST_CASE("Minkowski combination") {
  const PointSet a = S({-0.25, 0.0, 0.25}), b = S({-1.0, 1.0});
  const std::vector<double> half{0.5, 0.5};
  CHECK(approx_equal(minkowski_combination(half, std::vector<PointSet>{a, b}),
                     S({-0.625, -0.5, -0.375, 0.375, 0.5, 0.625}), 1e-12));
  const std::vector<double> two{2.0};
  CHECK(approx_equal(minkowski_combination(two, std::vector<PointSet>{a}), S({-0.5, 0.0, 0.5}), 1e-12));
  const std::vector<double> diff{1.0, -1.0};
  CHECK(approx_equal(minkowski_combination(diff, std::vector<PointSet>{S({0.0}), S({0.0})}), S({0.0}), 1e-12));
}

TEST_CASE("random metric linear combinations match the brute-force oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-6, 6), count(1, 4), len(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = trial % 2 + 1;
    const int n = len(rng);
    std::vector<PointSet> sets;
    std::vector<oracle::Set> osets;
    std::vector<double> lambdas;
    for (int i = 0; i < n; ++i) {
      std::vector<Point> pts;
      const int k = count(rng);
      for (int j = 0; j < k; ++j) {
        std::vector<double> c(d);
        for (double& v : c) v = coord(rng) / 3.0;
        pts.emplace_back(c);
      }
      sets.emplace_back(pts);
      osets.push_back(to_oracle(sets.back()));
      lambdas.push_back(0.1 + 0.2 * i);
    }
    const PointSet lib = metric_linear_combination(lambdas, sets);
    const auto ref = oracle::riemann_set(osets, lambdas, 1e-9);
    CHECK(oracle::hausdorff(to_oracle(lib), ref) <= 1e-12);
    CHECK(enumerate_metric_chains(sets).size() == oracle::chains(osets, 1e-9).size());
  }
}

TEST_CASE("convex hull") {
  ConvexHull line(S({-1.0, 1.0, 0.0}));
  REQUIRE(line.vertices().size() == 2);
  CHECK(line.contains(Point{0.5}));
  CHECK(line.distance(Point{3.0}) == doctest::Approx(2.0));

  ConvexHull square(PointSet{Point{0.0, 0.0}, Point{1.0, 0.0}, Point{1.0, 1.0}, Point{0.0, 1.0}});
  CHECK(square.vertices().size() == 4);

  ConvexHull tri(PointSet{Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.0, 1.0}, Point{0.2, 0.2}});
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.contains(Point{0.2, 0.2}));
  CHECK(tri.distance(Point{1.0, 1.0}) == doctest::Approx(std::sqrt(2.0) / 2.0));

  const ConvexHull sum = minkowski_sum(square, square.scaled(2.0));
  CHECK(sum.vertices().size() == 4);
  CHECK(sum.contains(Point{3.0, 3.0}, 1e-12));
  CHECK(sum.distance(Point{4.0, 3.0}) == doctest::Approx(1.0));
}

TEST_CASE("nets cover their continua") {
  const double eps = 0.05;
  const PointSet disc = disc_net(Point{0.0, 0.0}, 1.0, eps);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Point p{u(rng), u(rng)};
    if (p.norm() > 1.0) continue;
    CHECK(disc.distance_to(p) <= eps);
  }
  for (const Point& p : disc.points()) CHECK(p.norm() <= 1.0 + 1e-12);

  const PointSet seg = segment_net(Point{0.0, 0.0}, Point{1.0, 1.0}, eps);
  CHECK(seg.distance_to(Point{0.5, 0.5}) <= eps);
  CHECK(seg.contains(Point{1.0, 1.0}, 1e-12));

  const PointSet circ = circle_net(Point{1.0, 0.0}, 2.0, eps);
  CHECK(circ.distance_to(Point{1.0, 2.0}) <= eps);
}

TEST_CASE("norm parsing") {
  CHECK(parse_norm("l1") == Norm::l1);
  CHECK(parse_norm("linf") == Norm::linf);
  CHECK(to_string(Norm::l2) == "l2");
  CHECK_THROWS_AS(parse_norm("l3"), std::invalid_argument);
}

TEST_CASE("large sets use the tree and agree with a linear scan") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts;
  for (int i = 0; i < 2000; ++i) pts.push_back(Point{u(rng), u(rng)});
  const PointSet s(pts);
  const auto os = to_oracle(s);
  for (Norm nrm : {Norm::l1, Norm::l2, Norm::linf}) {
    for (int i = 0; i < 50; ++i) {
      const Point q{2 * u(rng), 2 * u(rng)};
      double best = 1e300;
      for (const Point& p : pts) best = std::min(best, distance(p, q, nrm));
      CHECK(s.distance_to(q, nrm) == doctest::Approx(best).epsilon(1e-14));
    }
  }
  const Point q{0.3, -0.2};
  CHECK(s.distance_to(q) == doctest::Approx(oracle::dist_to_set({0.3, -0.2}, os)));
}
