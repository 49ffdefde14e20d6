#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

namespace mfa {

// Norm used on R^d. All sets and selections in one computation share a norm.
enum class Norm { l1, l2, linf };

std::string_view to_string(Norm norm);

// Accepts "l1", "l2" and "linf"; throws std::invalid_argument otherwise.
Norm parse_norm(std::string_view text);

// Tolerances and limits shared by the geometric primitives.
//
// tie_tol   minimizers within this absolute slack of the minimum distance are
//           all reported as projections.
// dedup_tol points closer than this (max-coordinate distance) are merged when a
//           point set is built.
// chain_limit  exact chain enumeration refuses to produce more chains.
struct Metric {
  Norm norm = Norm::l2;
  double tie_tol = 1e-9;
  double dedup_tol = 1e-12;
  std::size_t chain_limit = 1'000'000;
};

inline constexpr double kDefaultDedupTol = 1e-12;

double norm_of(std::span<const double> v, Norm norm);
double distance(std::span<const double> a, std::span<const double> b, Norm norm);

}  // namespace mfa
