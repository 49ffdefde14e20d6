#pragma once

namespace mfa {

// Dirichlet kernel D_n(x) = 1/2 + sum_{k=1}^n cos(kx) = sin((n + 1/2) x) / (2 sin(x / 2)).
double dirichlet(int n, double x);

// Modified kernel D*_n(x) = (1/2) sin(nx) cot(x / 2) = D_n(x) - cos(nx) / 2.
double modified_dirichlet(int n, double x);

// Phi_n(x) = x/2 + sum_{k=1}^n sin(kx) / k, the antiderivative of D_n with Phi_n(0) = 0.
double dirichlet_antiderivative(int n, double x);

// Antiderivative of D*_n vanishing at 0: Phi_n(x) - sin(nx) / (2n).
double modified_dirichlet_antiderivative(int n, double x);

}  // namespace mfa
