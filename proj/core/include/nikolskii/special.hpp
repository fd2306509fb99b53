#pragma once

#include <vector>

namespace nikolskii {

double log_beta(double a, double b);
double beta_function(double a, double b);

/// Nodes and weights of an n-point Gauss–Jacobi rule for the weight
/// (1-x)^a (1+x)^b on [-1,1]. Nodes are ascending.
struct GaussRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub–Welsch eigenvalues followed by Newton polishing on the orthonormal
/// recurrence; weights are the Christoffel numbers 1 / sum_k p_k(x_i)^2.
/// Requires a > -1, b > -1, n >= 1.
GaussRule1D gauss_jacobi(int n, double a, double b);

/// Same rule mapped to [0,1] for the weight s^c (1-s)^d.
GaussRule1D gauss_jacobi_unit(int n, double c, double d);

/// Gegenbauer polynomial C_n^lambda(x). For lambda == 0 this returns the
/// Chebyshev polynomial T_n(x), the normalization under which the
/// product formula T_t C_n = C_n(t) C_n(x) / C_n(1) stays valid.
double gegenbauer(int n, double lambda, double x);

/// C_n^lambda(1) = Gamma(n + 2 lambda) / (n! Gamma(2 lambda)), and 1 for lambda == 0.
double gegenbauer_at_one(int n, double lambda);

double chebyshev_t(int n, double x);

}  // namespace nikolskii
