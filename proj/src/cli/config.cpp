#include "mfa/cli/config.hpp"

#include <fstream>
#include <set>

namespace mfa::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("bad value for '" + key + "': " + e.what());
  }
}

template <typename T>
void read(const json& j, const std::string& key, T& out) {
  if (j.contains(key)) out = get<T>(j, key);
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  reject_unknown(j,
                 {"fixture", "svf", "scalar", "eps", "jump", "orders", "x_grid", "seeds", "norm", "tolerances", "K",
                  "C", "weight", "method", "cells", "sets", "output"},
                 "config");
  ExperimentConfig cfg;
  read(j, "fixture", cfg.fixture);
  if (j.contains("svf")) cfg.svf = j.at("svf");
  read(j, "scalar", cfg.scalar);
  read(j, "eps", cfg.eps);
  read(j, "jump", cfg.jump);
  read(j, "orders", cfg.orders);
  read(j, "x_grid", cfg.x_grid);
  if (j.contains("seeds")) {
    const json& s = j.at("seeds");
    reject_unknown(s, {"x", "y", "depth"}, "seeds");
    read(s, "x", cfg.seeds.x_seeds);
    read(s, "y", cfg.seeds.y_seeds);
    read(s, "depth", cfg.seeds.depth);
  }
  if (j.contains("norm")) {
    try {
      cfg.metric.norm = parse_norm(get<std::string>(j, "norm"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    reject_unknown(t, {"tie", "dedup", "membership", "quadrature"}, "tolerances");
    read(t, "tie", cfg.metric.tie_tol);
    read(t, "dedup", cfg.metric.dedup_tol);
    read(t, "membership", cfg.membership_tol);
    read(t, "quadrature", cfg.qtol);
  }
  if (j.contains("K")) cfg.K = get<double>(j, "K");
  read(j, "C", cfg.C);
  if (j.contains("weight")) {
    const json& w = j.at("weight");
    reject_unknown(w, {"kind", "c0", "c1"}, "weight");
    read(w, "kind", cfg.weight.kind);
    read(w, "c0", cfg.weight.c0);
    read(w, "c1", cfg.weight.c1);
  }
  read(j, "method", cfg.method);
  read(j, "cells", cfg.cells);
  if (j.contains("sets")) {
    const json& s = j.at("sets");
    reject_unknown(s, {"A", "B"}, "sets");
    read(s, "A", cfg.set_a);
    read(s, "B", cfg.set_b);
  }
  read(j, "output", cfg.output);
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

void validate(const ExperimentConfig& cfg) {
  for (int n : cfg.orders) {
    if (n < 1) throw ConfigError("orders must be positive");
  }
  if (!(cfg.metric.tie_tol > 0.0) || !(cfg.metric.dedup_tol > 0.0) || !(cfg.membership_tol > 0.0) ||
      !(cfg.qtol > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
  if (!(cfg.eps > 0.0)) throw ConfigError("eps must be positive");
  if (cfg.seeds.x_seeds == 0) throw ConfigError("seeds.x must be at least 1");
  if (cfg.seeds.depth < 1 || cfg.seeds.depth > 24) throw ConfigError("seeds.depth must lie in [1, 24]");
  if (cfg.K && !(*cfg.K > 0.0)) throw ConfigError("K must be positive");
  if (!(cfg.C > 0.0)) throw ConfigError("C must be positive");
  if (cfg.cells == 0) throw ConfigError("cells must be positive");
  if (cfg.method != "exact" && cfg.method != "family" && cfg.method != "aumann") {
    throw ConfigError("method must be exact, family or aumann");
  }
  if (cfg.weight.kind != "constant" && cfg.weight.kind != "linear" && cfg.weight.kind != "cosine") {
    throw ConfigError("weight.kind must be constant, linear or cosine");
  }
  if (!cfg.fixture.empty() && cfg.svf) throw ConfigError("give either fixture or svf, not both");
}

}  // namespace mfa::cli
