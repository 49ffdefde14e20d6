#include "mfa/cli/inline_svf.hpp"

#include <numbers>
#include <set>
#include <string>

#include "mfa/cli/config.hpp"
#include "mfa/geometry/nets.hpp"

namespace mfa::cli {

namespace {

using nlohmann::json;

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double number(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number()) throw ConfigError(where + " needs a number '" + key + "'");
  return j.at(key).get<double>();
}

Point point(const json& j, const std::string& where) {
  try {
    return Point(j.get<std::vector<double>>());
  } catch (const std::exception& e) {
    throw ConfigError(where + ": bad point: " + e.what());
  }
}

Point point_at(const json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + " needs a point '" + key + "'");
  return point(j.at(key), where);
}

PointSet piece_value(const json& p, double dedup_tol, const std::string& where) {
  std::vector<PointSet> parts;
  if (p.contains("points")) {
    std::vector<double> flat;
    std::size_t dim = 0;
    for (const json& q : p.at("points")) {
      const Point x = point(q, where);
      if (dim != 0 && x.dim() != dim) throw ConfigError(where + ": points of different dimensions");
      dim = x.dim();
      flat.insert(flat.end(), x.coords().begin(), x.coords().end());
    }
    if (dim != 0) parts.push_back(PointSet::from_coords(dim, std::move(flat), dedup_tol));
  }
  if (p.contains("curves")) {
    for (const json& c : p.at("curves")) {
      only_keys(c, {"kind", "from", "to", "center", "radius", "eps"}, where + " curve");
      const std::string kind = c.value("kind", "");
      const double eps = number(c, "eps", where + " curve");
      if (kind == "segment") {
        parts.push_back(segment_net(point_at(c, "from", where), point_at(c, "to", where), eps));
      } else if (kind == "circle") {
        parts.push_back(circle_net(point_at(c, "center", where), number(c, "radius", where), eps));
      } else {
        throw ConfigError(where + ": curve kind must be segment or circle");
      }
    }
  }
  if (p.contains("discs")) {
    for (const json& d : p.at("discs")) {
      only_keys(d, {"center", "radius", "eps"}, where + " disc");
      parts.push_back(disc_net(point_at(d, "center", where), number(d, "radius", where), number(d, "eps", where)));
    }
  }
  if (parts.empty()) throw ConfigError(where + " has an empty value");
  return parts.size() == 1 ? parts.front() : set_union(parts);
}

}  // namespace

SetValuedFunction parse_inline_svf(const json& j, double dedup_tol) {
  only_keys(j, {"domain", "variation", "pieces"}, "svf");
  double a = -std::numbers::pi, b = std::numbers::pi;
  if (j.contains("domain")) {
    const auto d = j.at("domain").get<std::vector<double>>();
    if (d.size() != 2 || !(d[0] < d[1])) throw ConfigError("svf.domain must be [a, b] with a < b");
    a = d[0];
    b = d[1];
  }
  if (!j.contains("pieces") || !j.at("pieces").is_array() || j.at("pieces").empty()) {
    throw ConfigError("svf needs a nonempty 'pieces' array");
  }
  std::vector<SetPiece> pieces;
  std::size_t index = 0;
  for (const json& p : j.at("pieces")) {
    const std::string where = "svf piece " + std::to_string(index++);
    only_keys(p, {"from", "to", "closed", "points", "curves", "discs", "velocity", "anchor"}, where);
    const double lo = p.contains("from") ? number(p, "from", where) : a;
    const double hi = p.contains("to") ? number(p, "to", where) : b;
    if (lo > hi) throw ConfigError(where + ": from exceeds to");
    bool include_lo = true, include_hi = hi == b;
    if (p.contains("closed")) {
      const auto c = p.at("closed").get<std::vector<bool>>();
      if (c.size() != 2) throw ConfigError(where + ": closed must be [bool, bool]");
      include_lo = c[0];
      include_hi = c[1];
    }
    std::optional<PointSet> base;
    std::optional<Point> velocity;
    try {
      base = piece_value(p, dedup_tol, where);
      if (p.contains("velocity")) velocity = point(p.at("velocity"), where);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + ": " + e.what());
    }
    if (velocity && velocity->dim() != base->dim()) throw ConfigError(where + ": velocity dimension mismatch");
    const double anchor = p.contains("anchor") ? number(p, "anchor", where) : lo;
    SetPiece s{lo, hi, include_lo, include_hi, std::move(*base), velocity, anchor};
    pieces.push_back(std::move(s));
  }
  std::optional<double> hint;
  if (j.contains("variation")) hint = number(j, "variation", "svf");
  try {
    return piecewise_svf(a, b, std::move(pieces), hint);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("svf: ") + e.what());
  }
}

}  // namespace mfa::cli
