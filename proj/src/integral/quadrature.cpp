#include "mfa/integral/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <stdexcept>

namespace mfa {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
  return simpson_step(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

template <int N>
void fill_rule(double a, double b, std::span<double> nodes, std::span<double> weights) {
  using rule = boost::math::quadrature::gauss<double, N>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  // Boost stores the nonnegative abscissae; odd orders include zero first.
  std::size_t k = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      nodes[k] = c;
      weights[k++] = h * w[i];
      continue;
    }
    nodes[k] = c - h * x[i];
    weights[k++] = h * w[i];
    nodes[k] = c + h * x[i];
    weights[k++] = h * w[i];
  }
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

void gauss_legendre(int order, double a, double b, std::span<double> nodes, std::span<double> weights) {
  if (nodes.size() != static_cast<std::size_t>(order) || weights.size() != nodes.size()) {
    throw std::invalid_argument("quadrature output size must equal the order");
  }
  switch (order) {
    case 4: return fill_rule<4>(a, b, nodes, weights);
    case 6: return fill_rule<6>(a, b, nodes, weights);
    case 8: return fill_rule<8>(a, b, nodes, weights);
    case 10: return fill_rule<10>(a, b, nodes, weights);
    case 15: return fill_rule<15>(a, b, nodes, weights);
    case 20: return fill_rule<20>(a, b, nodes, weights);
    default: throw std::invalid_argument("supported Gauss-Legendre orders: 4, 6, 8, 10, 15, 20");
  }
}

}  // namespace mfa
