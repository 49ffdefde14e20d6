#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mfa/geometry/metric.hpp"

namespace mfa::cli {

// Invalid or incomplete experiment configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeedConfig {
  std::size_t x_seeds = 9;
  std::size_t y_seeds = 0;  // 0: every point of F(x)
  int depth = 10;
};

// Weight k for the integral verb: "constant" is c0, "linear" is c0 + c1 x,
// "cosine" is c0 + c1 cos x.
struct WeightSpec {
  std::string kind = "constant";
  double c0 = 1.0;
  double c1 = 0.0;
};

struct ExperimentConfig {
  std::string fixture;                 // fixture id, or empty with an inline svf
  std::optional<nlohmann::json> svf;   // inline description
  std::string scalar;                  // scalar function id for bound-check
  double eps = 1e-3;                   // net resolution of the balls fixture
  double jump = 0.0;                   // jump location of the jump fixtures
  std::vector<int> orders{16, 64, 256};
  std::vector<double> x_grid{0.0};
  SeedConfig seeds;
  Metric metric;
  double membership_tol = 1e-6;
  double qtol = 1e-10;
  std::optional<double> K;             // Fourier bound constant; theoretical value when absent
  double C = 2.0;
  WeightSpec weight;
  std::string method = "family";       // integral: exact, family or aumann
  std::size_t cells = 8;               // integral: uniform cells for exact and aumann
  std::vector<std::vector<double>> set_a;  // hausdorff
  std::vector<std::vector<double>> set_b;
  std::string output;                  // empty: standard output
};

// Reads a JSON object; unknown keys at any level are rejected.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// Checks orders > 0, tolerances > 0 and the seed settings.
void validate(const ExperimentConfig& cfg);

}  // namespace mfa::cli
