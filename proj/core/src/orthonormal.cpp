#include "nikolskii/orthonormal.hpp"

#include <cmath>
#include <numeric>

#include "nikolskii/error.hpp"

namespace nikolskii {

OrthonormalSystem::OrthonormalSystem(ExponentSet exponents, WeightSpec weight, Basis basis,
                                     Eigen::MatrixXd coefficients, double gram_residual)
    : exponents_(std::move(exponents)),
      weight_(std::move(weight)),
      basis_(basis),
      coefficients_(std::move(coefficients)),
      gram_residual_(gram_residual) {}

Eigen::VectorXd OrthonormalSystem::values(std::span<const double> x) const {
  Eigen::VectorXd raw(exponents_.size());
  basis_values(exponents_, basis_, x, std::span<double>(raw.data(), raw.size()));
  return coefficients_.transpose() * raw;
}

Eigen::MatrixXd OrthonormalSystem::values_at(std::span<const double> points) const {
  return basis_matrix(exponents_, basis_, points) * coefficients_;
}

double OrthonormalSystem::kernel_diagonal(std::span<const double> x) const {
  return values(x).squaredNorm();
}

Polynomial OrthonormalSystem::combination(const Eigen::VectorXd& coords) const {
  require(static_cast<std::size_t>(coords.size()) == size(), ErrorCode::kDimensionMismatch,
          "combination: coordinate count must match system size");
  const Eigen::VectorXd c = coefficients_ * coords;
  return Polynomial(exponents_, std::vector<double>(c.data(), c.data() + c.size()), basis_);
}

Polynomial OrthonormalSystem::function(std::size_t j) const {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size()));
  e(static_cast<Eigen::Index>(j)) = 1.0;
  return combination(e);
}

Polynomial OrthonormalSystem::kernel_section(std::span<const double> x0) const {
  return combination(values(x0));
}

int gram_rule_degree(const ExponentSet& exponents, const WeightSpec& weight) {
  const bool per_axis = weight.kind() == WeightKind::kCoordinateProduct ||
                        weight.kind() == WeightKind::kGegenbauerInterval;
  return 2 * (per_axis ? exponents.max_axis_degree() : exponents.total_degree());
}

OrthonormalSystem orthonormalize(const ExponentSet& exponents, const WeightSpec& weight,
                                 const QuadratureRule& rule, Basis basis,
                                 std::span<const std::size_t> order) {
  require(!exponents.empty(), ErrorCode::kInvalidArgument, "orthonormalize: empty exponent set");
  require(rule.dim == exponents.dim(), ErrorCode::kDimensionMismatch,
          "orthonormalize: rule and exponent set dimensions differ");
  const auto n = static_cast<Eigen::Index>(exponents.size());
  std::vector<std::size_t> sequence(exponents.size());
  if (order.empty()) {
    std::iota(sequence.begin(), sequence.end(), std::size_t{0});
  } else {
    require(order.size() == exponents.size(), ErrorCode::kDimensionMismatch,
            "orthonormalize: order must be a permutation of the basis");
    sequence.assign(order.begin(), order.end());
  }

  Eigen::MatrixXd v = basis_matrix(exponents, basis, rule.nodes);
  for (Eigen::Index i = 0; i < v.rows(); ++i) v.row(i) *= std::sqrt(rule.weights[i]);

  Eigen::MatrixXd q(v.rows(), n);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  double leading = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = static_cast<Eigen::Index>(sequence[k]);
    Eigen::VectorXd col = v.col(src);
    Eigen::VectorXd coef = Eigen::VectorXd::Zero(n);
    coef(src) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < k; ++j) {
        const double h = q.col(j).dot(col);
        col -= h * q.col(j);
        coef -= h * c.col(j);
      }
    }
    const double pivot = col.norm();
    if (k == 0) leading = pivot;
    require(pivot > 1e-13 * leading && pivot > 0.0, ErrorCode::kRankDeficient,
            "orthonormalize: numerically rank deficient (exponent set too large for the rule)");
    q.col(k) = col / pivot;
    c.col(k) = coef / pivot;
  }

  const Eigen::MatrixXd phi = v * c;
  const Eigen::MatrixXd gram = phi.transpose() * phi;
  const double residual = (gram - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
  return OrthonormalSystem(exponents, weight, basis, std::move(c), residual);
}

OrthonormalSystem orthonormalize(const ExponentSet& exponents, const WeightSpec& weight,
                                 Basis basis) {
  const QuadratureRule rule = make_rule(weight, gram_rule_degree(exponents, weight));
  return orthonormalize(exponents, weight, rule, basis);
}

}  // namespace nikolskii
