#include "mfa/fourier/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mfa {

namespace {

void require_delta(double delta) {
  if (!(delta > 0.0 && delta <= std::numbers::pi)) throw std::invalid_argument("delta must lie in (0, pi]");
}

double cot_half(double delta) { return std::cos(0.5 * delta) / std::sin(0.5 * delta); }

}  // namespace

double djordan_bound_rhs(const BoundParams& p, int n) {
  require_delta(p.delta);
  if (n < 1) throw std::invalid_argument("kernel order must be at least 1");
  if (p.B < 0.0) throw std::invalid_argument("variation budget must be nonnegative");
  const double w = p.omega ? p.omega(p.delta) : 0.0;
  return 2.0 * p.B / (std::numbers::pi * n) * (1.0 + 6.0 * cot_half(p.delta)) + 8.0 * p.C * w;
}

std::vector<double> delta_grid(double hi, std::size_t count, double lo) {
  if (!(hi > lo && lo > 0.0) || count == 0) throw std::invalid_argument("delta grid needs 0 < lo < hi");
  std::vector<double> g(count);
  const double ratio = std::log(hi / lo);
  for (std::size_t i = 0; i < count; ++i) g[i] = lo * std::exp(ratio * double(i + 1) / double(count));
  g.back() = hi;
  return g;
}

BestBound djordan_bound_best(double B, double C, const ModulusBound& omega, int n,
                             const std::vector<double>& deltas) {
  BestBound best{std::numeric_limits<double>::infinity(), 0.0};
  for (double d : deltas) {
    const double v = djordan_bound_rhs(BoundParams{B, d, C, omega}, n);
    if (v < best.value) best = {v, d};
  }
  return best;
}

double svf_bound_rhs(double V, int n, double delta, const ModulusBound& omega, double K) {
  require_delta(delta);
  if (n < 1) throw std::invalid_argument("kernel order must be at least 1");
  if (!(K > 0.0)) throw std::invalid_argument("K must be positive");
  return K * (V / n * (1.0 + 6.0 * cot_half(delta)) + omega(delta));
}

ModulusBound svf_omega(const MonotoneFunction& vF, double x) {
  return [vF, x](double delta) {
    return std::max(monotone_moduli(vF, x, 2.0 * delta).left_quasi, monotone_moduli(vF, x, delta).right_quasi);
  };
}

double svf_delta0(double x) { return std::min(x + std::numbers::pi, std::numbers::pi - x); }

BestBound svf_bound_best(double V, int n, const ModulusBound& omega, double K, double delta0) {
  if (!(delta0 > 0.0)) throw std::invalid_argument("x must lie inside (-pi, pi)");
  const double hi = std::min(delta0, std::numbers::pi);
  BestBound best{std::numeric_limits<double>::infinity(), 0.0};
  for (double d : delta_grid(hi, 32, std::min(1e-3, hi / 2))) {
    const double v = svf_bound_rhs(V, n, d, omega, K);
    if (v < best.value) best = {v, d};
  }
  return best;
}

double default_K(Norm norm, std::size_t dim) {
  const double d = static_cast<double>(dim);
  switch (norm) {
    case Norm::l1: return 16.0 * d;
    case Norm::l2: return 16.0 * std::sqrt(d);
    case Norm::linf: return 16.0;
  }
  return 16.0 * d;
}

KCalibration calibrate_K(const std::vector<double>& observed, const std::vector<double>& unit_bound) {
  if (observed.size() != unit_bound.size()) throw std::invalid_argument("observation and bound counts differ");
  KCalibration k;
  k.samples = observed.size();
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(unit_bound[i] > 0.0)) throw std::invalid_argument("unit bounds must be positive");
    k.worst_ratio = std::max(k.worst_ratio, observed[i] / unit_bound[i]);
  }
  k.K = k.worst_ratio > 0.0 ? k.worst_ratio : std::numeric_limits<double>::min();
  return k;
}

ModulusBound scalar_omega(const PeriodicFunction& f, double x) {
  return [f, x](double delta) {
    const auto [left, right] = periodic_quasi_moduli(f, x, delta);
    return std::max(left, right);
  };
}

MembershipReport class_membership(const PeriodicFunction& f, double B, double x, const ModulusBound& omega,
                                  const std::vector<double>& probes, double tol) {
  MembershipReport r;
  r.variation = f.variation;
  r.variation_margin = B - f.variation;
  r.moduli_margin = std::numeric_limits<double>::infinity();
  for (double d : probes) {
    const auto [left, right] = periodic_quasi_moduli(f, x, d);
    r.moduli_margin = std::min(r.moduli_margin, omega(d) - std::max(left, right));
  }
  r.member = r.variation_margin >= -tol && r.moduli_margin >= -tol;
  return r;
}

}  // namespace mfa
