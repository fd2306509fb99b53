#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "nikolskii/polynomial.hpp"
#include "nikolskii/quadrature.hpp"
#include "nikolskii/weights.hpp"

namespace nikolskii {

/// Orthonormal basis phi_0..phi_{n-1} of span(exponents) in L_{2,W}.
/// Column j of `coefficients()` expands phi_j in the source basis.
class OrthonormalSystem {
 public:
  OrthonormalSystem(ExponentSet exponents, WeightSpec weight, Basis basis,
                    Eigen::MatrixXd coefficients, double gram_residual);

  const ExponentSet& exponents() const { return exponents_; }
  const WeightSpec& weight() const { return weight_; }
  Basis basis() const { return basis_; }
  const Eigen::MatrixXd& coefficients() const { return coefficients_; }
  double gram_residual() const { return gram_residual_; }
  std::size_t size() const { return exponents_.size(); }

  /// (phi_0(x), ..., phi_{n-1}(x)).
  Eigen::VectorXd values(std::span<const double> x) const;
  /// Rows are points, columns functions.
  Eigen::MatrixXd values_at(std::span<const double> points) const;
  /// K(x, x) = sum_k phi_k(x)^2.
  double kernel_diagonal(std::span<const double> x) const;
  Polynomial function(std::size_t j) const;
  /// K(x0, .) = sum_k phi_k(x0) phi_k.
  Polynomial kernel_section(std::span<const double> x0) const;
  /// Polynomial with the given coordinates in this orthonormal basis.
  Polynomial combination(const Eigen::VectorXd& coords) const;

 private:
  ExponentSet exponents_;
  WeightSpec weight_;
  Basis basis_;
  Eigen::MatrixXd coefficients_;
  double gram_residual_;
};

/// Quadrature degree making the Gram matrix of `exponents` exact under `weight`
/// (per axis for cube weights, total degree otherwise).
int gram_rule_degree(const ExponentSet& exponents, const WeightSpec& weight);

/// Modified Gram–Schmidt with one reorthogonalization pass on the discrete
/// inner product of `rule`. `order` permutes the processing order (empty:
/// exponent order). Throws kRankDeficient when a pivot falls below 1e-13 times
/// the leading pivot.
OrthonormalSystem orthonormalize(const ExponentSet& exponents, const WeightSpec& weight,
                                 const QuadratureRule& rule, Basis basis = Basis::kChebyshev,
                                 std::span<const std::size_t> order = {});

/// Same, with a rule of degree gram_rule_degree(...).
OrthonormalSystem orthonormalize(const ExponentSet& exponents, const WeightSpec& weight,
                                 Basis basis = Basis::kChebyshev);

}  // namespace nikolskii
