#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mfa {

// Coefficients of a0/2 + sum_{k=1}^n (a_k cos kt + b_k sin kt); b[0] is unused.
struct FourierCoefficients {
  std::vector<double> a;
  std::vector<double> b;

  int order() const { return static_cast<int>(a.size()) - 1; }
};

// A real 2pi-periodic function described on [-pi, pi).
struct PeriodicFunction {
  std::string name;
  std::function<double(double)> eval;  // any real t
  std::function<double(double)> left_limit;
  std::function<double(double)> right_limit;
  std::vector<double> jumps;  // discontinuities in [-pi, pi)
  double variation = 0.0;     // over one period, the jump at +-pi included
  // Variation of the periodic extension over the open interval (u, w), when known exactly.
  std::function<double(double, double)> open_variation;
  // Jump size |f(t + 0) - f(t - 0)| of the periodic extension at t, when open_variation is set.
  std::function<double(double)> jump_at;
  // Closed-form coefficients up to order n, when known.
  std::function<FourierCoefficients(int)> closed_form;

  double operator()(double t) const { return eval(t); }
  double midpoint(double t) const { return 0.5 * (left_limit(t) + right_limit(t)); }
};

// A continuous function given by a callable, with its variation over a period.
PeriodicFunction smooth_periodic(std::string name, std::function<double(double)> f, double variation);

// Right-continuous piecewise linear function: piece j is slope_j * t + intercept_j on
// [t_j, t_{j+1}) with t_0 = -pi < breaks < t_m = pi. Coefficients, variation and
// quasi-moduli are exact.
PeriodicFunction piecewise_linear(std::string name, std::vector<double> breaks,
                                  std::vector<std::pair<double, double>> pieces);

// -1 on [-pi, 0), 1 on [0, pi). Periodized variation 4.
PeriodicFunction square_wave();

// Slope 1 with a single jump of -2pi at j in (-pi, pi), continuous at +-pi. Variation 4pi.
PeriodicFunction sawtooth(double j = 1.0);

// 0.3 t + H(t - 0.5) on [-pi, pi). Variation 1.2pi + 2.
PeriodicFunction monotone_step();

// Coefficients up to order n: closed form when available, otherwise adaptive
// Gauss-Kronrod quadrature on the pieces between jumps with tolerance qtol.
FourierCoefficients fourier_coefficients(const PeriodicFunction& f, int n, double qtol = 1e-10);
FourierCoefficients fourier_coefficients(const std::function<double(double)>& f, int n,
                                         const std::vector<double>& breaks = {}, double qtol = 1e-10);

double classical_partial_sum(const FourierCoefficients& c, int n, double x);
double classical_partial_sum(const PeriodicFunction& f, int n, double x);

// Left and right quasi-moduli of the variation function of f at x, that is the
// variation of f over [x - delta, x) and over (x, x + delta]. Exact when
// open_variation is set, otherwise estimated on a dyadic grid of the window.
std::pair<double, double> periodic_quasi_moduli(const PeriodicFunction& f, double x, double delta);

}  // namespace mfa
