#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mfa/cli/config.hpp"
#include "mfa/cli/experiments.hpp"
#include "mfa/cli/inline_svf.hpp"
#include "mfa/geometry/operations.hpp"

using namespace mfa;
using namespace mfa::cli;
using nlohmann::json;

namespace {

const std::string kConfigs = MFA_CLI_CONFIGS;

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_config(json::parse(R"({
    "fixture": "lines", "orders": [4, 8], "x_grid": [0.0, 1.0],
    "seeds": {"x": 3, "y": 2, "depth": 5}, "norm": "linf",
    "tolerances": {"tie": 1e-8, "membership": 1e-5},
    "K": 20, "weight": {"kind": "cosine", "c0": 1, "c1": 0.5}
  })"));
  CHECK(cfg.fixture == "lines");
  CHECK(cfg.orders == std::vector<int>{4, 8});
  CHECK(cfg.seeds.y_seeds == 2);
  CHECK(cfg.metric.norm == Norm::linf);
  CHECK(cfg.metric.tie_tol == 1e-8);
  CHECK(cfg.K.value() == 20.0);
  CHECK(cfg.weight.kind == "cosine");

  CHECK_THROWS_AS(parse_config(json::parse(R"({"fixtures": "lines"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"seeds": {"depth": 0}})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"orders": [0]})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"norm": "l7"})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"tolerances": {"tie": -1}})")), ConfigError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"eps": "small"})")), ConfigError);
  CHECK_THROWS_AS(load_config(kConfigs + "/bad_unknown_key.json"), ConfigError);
  CHECK_THROWS_AS(load_config(kConfigs + "/missing.json"), ConfigError);
}

TEST_CASE("inline set-valued functions") {
  const auto cfg = load_config(kConfigs + "/inline_two_points.json");
  const auto f = parse_inline_svf(*cfg.svf);
  CHECK(f.jump_points().size() == 1);
  CHECK(approx_equal(f(-1.0), PointSet::scalars({-1.0, 1.0}), 1e-15));
  CHECK(approx_equal(f(2.0), PointSet::scalars({0.0, 2.0}), 1e-15));

  const auto disc = parse_inline_svf(json::parse(R"({"pieces": [
      {"discs": [{"center": [0, 0], "radius": 1, "eps": 0.2}],
       "curves": [{"kind": "segment", "from": [2, 0], "to": [3, 0], "eps": 0.5}]}]})"));
  CHECK(disc.dim() == 2);
  CHECK(disc(0.0).contains(Point{3.0, 0.0}, 1e-12));

  CHECK_THROWS_AS(parse_inline_svf(json::parse(R"({"pieces": []})")), ConfigError);
  CHECK_THROWS_AS(parse_inline_svf(json::parse(R"({"pieces": [{"points": [[0]], "colour": 1}]})")), ConfigError);
  CHECK_THROWS_AS(parse_inline_svf(json::parse(R"({"pieces": [{"points": [[0], [0, 1]]}]})")), ConfigError);
  CHECK_THROWS_AS(parse_inline_svf(json::parse(R"({"pieces": [{"curves": [{"kind": "spiral", "eps": 1}]}]})")),
                  ConfigError);
}

TEST_CASE("convergence verb") {
  const auto r = run_convergence(load_config(kConfigs + "/convergence_constant.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.csv.rfind("n,x,target,distance,family_size\n", 0) == 0);
  CHECK(count_lines(r.csv) == 1 + 2 * 2);

  auto inline_cfg = load_config(kConfigs + "/inline_two_points.json");
  const auto ri = run_convergence(inline_cfg);
  CHECK(count_lines(ri.csv) == 3);
}

TEST_CASE("bound-check verb") {
  const auto r = run_bound_check(load_config(kConfigs + "/bound_sawtooth.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.csv.rfind("n,x,observed,bound_rhs,delta,pass\n", 0) == 0);
  CHECK(count_lines(r.csv) == 6);

  ExperimentConfig svf;
  svf.fixture = "unit-step";
  svf.orders = {8, 32};
  svf.seeds.depth = 8;
  const auto rs = run_bound_check(svf);
  CHECK(rs.csv.rfind("n,x,observed,unit_bound,K,bound_rhs,delta,pass\n", 0) == 0);
  CHECK(rs.exit_code == 0);
}

TEST_CASE("example verb") {
  ExperimentConfig cfg;
  const auto lines = run_example("lines", cfg);
  CHECK(lines.exit_code == 0);
  CHECK(lines.report.find("FAIL") == std::string::npos);

  const auto balls = run_example("balls", load_config(kConfigs + "/balls_coarse.json"));
  CHECK(balls.exit_code == 0);
  CHECK(count_lines(balls.report) == 3);

  CHECK_THROWS_AS(run_example("circles", cfg), ConfigError);
}

TEST_CASE("integral, hausdorff and selections verbs") {
  ExperimentConfig cfg;
  cfg.fixture = "constant";
  cfg.seeds.depth = 6;
  for (const char* method : {"exact", "family", "aumann"}) {
    cfg.method = method;
    const auto r = run_integral(cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.csv.rfind("y0", 0) == 0);
  }

  ExperimentConfig h;
  h.set_a = {{-0.25}, {0.0}, {0.25}};
  h.set_b = {{-1.0}, {1.0}};
  const auto rh = run_hausdorff(h);
  CHECK(rh.csv.find("hausdorff,directed_ab,directed_ba\n1,1,0.75") == 0);

  ExperimentConfig s;
  s.fixture = "lines";
  s.seeds.depth = 5;
  s.x_grid = {-1.0, 0.5, 1.0};
  const auto rs = run_selections(s);
  CHECK(rs.csv.rfind("selection,seed_x,x,y0\n", 0) == 0);
  CHECK(count_lines(rs.csv) > 3);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, -1.0 / 3.0, 1e-300, 12345.678}) CHECK(std::stod(format_double(v)) == v);
}
