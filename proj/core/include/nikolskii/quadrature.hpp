#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nikolskii/weights.hpp"

namespace nikolskii {

/// Nodes and positive weights with a domain tag and an algebraic exactness
/// degree. For cube rules the degree is per axis; for ball-type rules it is
/// total degree.
struct QuadratureRule {
  DomainKind domain = DomainKind::kInterval;
  int dim = 1;
  std::vector<double> nodes;  // row-major, dim entries per node
  std::vector<double> weights;
  int exact_degree = 0;

  std::size_t size() const { return weights.size(); }
  std::span<const double> node(std::size_t i) const {
    return {nodes.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
  double mass() const;
};

inline constexpr int kMaxCubeRuleDim = 4;
inline constexpr std::size_t kMaxRuleNodes = 4'000'000;

/// Exact for int_{-1}^{1} P(u) |u|^alpha (1-u^2)^beta du with deg P <= degree.
/// alpha == 0 uses Gauss–Jacobi directly; otherwise the even part is
/// integrated through u^2 = s and the nodes are +-sqrt(s_i).
QuadratureRule interval_rule(double alpha, double beta, int degree);

/// Tensor product of interval rules, exact per axis to `degree`.
QuadratureRule cube_rule(std::span<const double> alpha, std::span<const double> beta, int degree);

/// Radial Gauss–Jacobi rule in r^2 tensored with an angular rule on S^{m-1};
/// weight (1-|x|^2)^{lambda - 1/2}, exact to total degree `degree`. m in {1,2,3}.
QuadratureRule ball_rule(int m, double lambda, int degree);

/// Same construction with weight (1-|x|^2)^exponent, exponent > -1.
QuadratureRule ball_rule_with_exponent(int m, double exponent, int degree);

/// Rule on B^2 for (1-u^2-v^2)^{lambda-1/2} |v|^{ambient_dim-2}, exact to total degree.
QuadratureRule disk_axial_rule(int ambient_dim, double lambda, int degree);

/// Surface rule on S^{m-1} (total mass |S^{m-1}|), exact to `degree`. m in {1,2,3}.
QuadratureRule sphere_rule(int m, int degree);

/// Rule for the weight's own domain. Cube rules are exact per axis.
QuadratureRule make_rule(const WeightSpec& weight, int degree);

/// Quadrature degree used for L_p norms of polynomials of (per-axis or total)
/// degree `poly_degree`: exact p * deg for even integer p, otherwise
/// max(4 * deg + 40, oversample * deg) with the non-polynomial integrand
/// |P|^p checked by node doubling in tests.
int norm_rule_degree(int poly_degree, double p);

/// True when p is an even integer, so |P|^p is a polynomial.
bool is_even_integer(double p);

}  // namespace nikolskii
