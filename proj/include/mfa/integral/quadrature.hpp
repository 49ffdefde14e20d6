#pragma once

#include <functional>
#include <span>

namespace mfa {

// Adaptive Simpson rule with absolute tolerance tol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-10,
                        int max_depth = 40);

// Gauss-Legendre rule of order 4, 6, 8, 10, 15 or 20 mapped to [a, b]; returns
// nodes and weights through the output spans, which must have size order.
void gauss_legendre(int order, double a, double b, std::span<double> nodes, std::span<double> weights);

}  // namespace mfa
