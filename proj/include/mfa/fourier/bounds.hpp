#pragma once

#include <functional>
#include <vector>

#include "mfa/fourier/periodic_function.hpp"
#include "mfa/geometry/metric.hpp"
#include "mfa/svf/analysis.hpp"

namespace mfa {

using ModulusBound = std::function<double(double)>;

struct BoundParams {
  double B = 0.0;      // variation budget
  double delta = 0.0;  // in (0, pi]
  double C = 2.0;      // kernel-integral constant
  ModulusBound omega;
};

// (2B / (pi n)) (1 + 6 cot(delta / 2)) + 8 C omega(delta).
double djordan_bound_rhs(const BoundParams& p, int n);

// count log-spaced deltas in (lo, hi], the last one equal to hi.
std::vector<double> delta_grid(double hi = 3.141592653589793, std::size_t count = 32, double lo = 1e-3);

struct BestBound {
  double value = 0.0;
  double delta = 0.0;
};

// Minimum of djordan_bound_rhs over the delta grid.
BestBound djordan_bound_best(double B, double C, const ModulusBound& omega, int n,
                             const std::vector<double>& deltas = delta_grid());

// K [(V / n)(1 + 6 cot(delta / 2)) + omega(delta)].
double svf_bound_rhs(double V, int n, double delta, const ModulusBound& omega, double K);

// omega(delta) = max(left quasi-modulus of v_F at x with window 2 delta,
//                    right quasi-modulus with window delta).
ModulusBound svf_omega(const MonotoneFunction& vF, double x);

// Distance from x to {-pi, pi}, the largest admissible delta.
double svf_delta0(double x);

// Minimum of svf_bound_rhs over the part of the delta grid inside (0, delta0].
BestBound svf_bound_best(double V, int n, const ModulusBound& omega, double K, double delta0);

// 16 K1 K2 with K1 = 1 and K2 the constant of max-coordinate domination of the
// norm on R^d: d for l1, sqrt(d) for l2, 1 for linf.
double default_K(Norm norm, std::size_t dim);

struct KCalibration {
  double K = 0.0;         // smallest K making every observation pass
  double worst_ratio = 0.0;
  std::size_t samples = 0;
};

// Fits the smallest K with observed[i] <= K * unit_bound[i], unit_bound being
// svf_bound_rhs evaluated with K = 1.
KCalibration calibrate_K(const std::vector<double>& observed, const std::vector<double>& unit_bound);

struct MembershipReport {
  bool member = false;
  double variation = 0.0;
  double variation_margin = 0.0;  // B - V(f)
  double moduli_margin = 0.0;     // min over probes of omega(delta) - quasi-modulus
};

// Checks V(f) <= B and that both quasi-moduli of v_f at x stay below omega on
// the probe deltas.
MembershipReport class_membership(const PeriodicFunction& f, double B, double x, const ModulusBound& omega,
                                  const std::vector<double>& probes = delta_grid(), double tol = 1e-12);

// The quasi-moduli of v_f at x as a modulus-bounding function of delta.
ModulusBound scalar_omega(const PeriodicFunction& f, double x);

}  // namespace mfa
