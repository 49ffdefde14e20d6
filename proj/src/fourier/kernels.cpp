#include "mfa/fourier/kernels.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace mfa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below this |sin(x/2)| the closed forms lose digits to cancellation.
constexpr double kSmallSine = 1e-3;

void require_order(int n) {
  if (n < 1) throw std::invalid_argument("kernel order must be at least 1");
}

// Representative of x in [-pi, pi).
double reduce(double x) { return x - kTwoPi * std::floor((x + std::numbers::pi) / kTwoPi); }

double cosine_sum(int n, double x) {
  double s = 0.5;
  for (int k = 1; k <= n; ++k) s += std::cos(k * x);
  return s;
}

}  // namespace

double dirichlet(int n, double x) {
  require_order(n);
  const double r = reduce(x);
  const double half = std::sin(0.5 * r);
  if (std::abs(half) < kSmallSine) return cosine_sum(n, r);
  return std::sin((n + 0.5) * r) / (2.0 * half);
}

double modified_dirichlet(int n, double x) {
  require_order(n);
  const double r = reduce(x);
  const double half = std::sin(0.5 * r);
  if (std::abs(half) < kSmallSine) return cosine_sum(n, r) - 0.5 * std::cos(n * r);
  return 0.5 * std::sin(n * r) * std::cos(0.5 * r) / half;
}

double dirichlet_antiderivative(int n, double x) {
  require_order(n);
  // sin(kx) as the imaginary part of successive powers of exp(ix), with the
  // rotation restarted from the exact value every 64 steps.
  const std::complex<double> step(std::cos(x), std::sin(x));
  std::complex<double> z = step;
  double s = 0.5 * x;
  for (int k = 1; k <= n; ++k) {
    s += z.imag() / k;
    z = (k % 64 == 0) ? std::complex<double>(std::cos((k + 1) * x), std::sin((k + 1) * x)) : z * step;
  }
  return s;
}

double modified_dirichlet_antiderivative(int n, double x) {
  return dirichlet_antiderivative(n, x) - std::sin(n * x) / (2.0 * n);
}

}  // namespace mfa
