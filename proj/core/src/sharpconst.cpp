#include "nikolskii/sharpconst.hpp"

#include <cmath>
#include <numbers>

#include "nikolskii/error.hpp"
#include "nikolskii/norms.hpp"

namespace nikolskii {

namespace {

bool per_axis_weight(const WeightSpec& weight) {
  return weight.kind() == WeightKind::kCoordinateProduct ||
         weight.kind() == WeightKind::kGegenbauerInterval;
}

int space_degree(const ExponentSet& exponents, const WeightSpec& weight) {
  return per_axis_weight(weight) ? exponents.max_axis_degree() : exponents.total_degree();
}

}  // namespace

SharpConstantProblem::SharpConstantProblem(ExponentSet exponents, WeightSpec weight, double p,
                                           SolverOptions options)
    : exponents_(std::move(exponents)),
      weight_(std::move(weight)),
      p_(p),
      options_(options),
      system_(orthonormalize(exponents_, weight_)) {
  require(p_ >= 1.0 && std::isfinite(p_), ErrorCode::kInvalidArgument,
          "sharp constant: p must lie in [1, inf)");
  require(!weight_.bookkeeping_only(), ErrorCode::kUnsupported,
          "sharp constant: weights on R^m carry no quadrature");
  const int deg = space_degree(exponents_, weight_);
  rule_degree_ = options_.rule_degree > 0 ? options_.rule_degree : norm_rule_degree(deg, p_);
  norm_rule_ = make_rule(weight_, rule_degree_);
  if (p_ != 2.0) {
    Eigen::MatrixXd values = system_.values_at(norm_rule_.nodes);
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(norm_rule_.weights.data(),
                                                          static_cast<Eigen::Index>(norm_rule_.size()));
    solver_.emplace(std::move(values), std::move(w), p_);
  }
}

double SharpConstantProblem::norm(const Polynomial& poly) const {
  return weighted_norm(poly, norm_rule_, p_);
}

double SharpConstantProblem::point_value(std::span<const double> x0, int restarts) const {
  if (p_ == 2.0) return std::sqrt(system_.kernel_diagonal(x0));
  SolverOptions opts = options_;
  opts.restarts = restarts;
  return solver_->solve(system_.values(x0), opts).value;
}

SharpConstResult SharpConstantProblem::at_point(std::span<const double> x0) const {
  require(static_cast<int>(x0.size()) == exponents_.dim(), ErrorCode::kDimensionMismatch,
          "sharp constant: point dimension mismatch");
  require(weight_.in_domain(x0), ErrorCode::kInvalidArgument,
          "sharp constant: x0 lies outside the closed domain");
  SharpConstResult result;
  result.maximizer.assign(x0.begin(), x0.end());
  result.diagnostics.quadrature_degree = rule_degree_;
  result.diagnostics.gram_residual = system_.gram_residual();
  const Eigen::VectorXd phi = system_.values(x0);
  if (p_ == 2.0) {
    const double k = phi.squaredNorm();
    result.value = std::sqrt(k);
    result.extremizer = system_.combination(phi / result.value);
    result.diagnostics.method = "kernel";
    return result;
  }
  const ExtremalSolution sol = solver_->solve(phi, options_);
  result.value = sol.value;
  result.extremizer = system_.combination(sol.coefficients);
  auto& d = result.diagnostics;
  d.method = "newton";
  d.restarts = sol.restarts;
  d.iterations = sol.iterations;
  d.first_order_residual = sol.first_order_residual;
  d.restart_spread = sol.spread;
  d.converged = sol.converged;
  d.certified = sol.converged && sol.spread <= 1e-6;
  return result;
}

bool SharpConstantProblem::rotation_invariant() const {
  return weight_.kind() == WeightKind::kBallRadial && weight_.dim() >= 2 &&
         exponents_ == ExponentSet::total_degree(weight_.dim(), exponents_.total_degree());
}

SharpConstResult SharpConstantProblem::sup() const {
  const int m = exponents_.dim();
  const bool kernel = p_ == 2.0;
  MaximizeOptions opts;
  opts.tolerance = kernel ? 1e-10 : 1e-8;
  opts.candidates = kernel ? 4 : 2;
  const ScalarField value_at = [this](std::span<const double> x) { return point_value(x, 1); };

  MaximizeResult best;
  if (rotation_invariant()) {
    // N_{x0} depends on |x0| only: search x0 = (r, 0, ..., 0).
    opts.grid_per_axis = kernel ? 65 : 9;
    opts.sign_symmetric = true;
    Point x(m, 0.0);
    best = maximize_over_domain(
        [&](std::span<const double> r) {
          x[0] = r[0];
          return value_at(x);
        },
        DomainKind::kInterval, 1, opts);
    const double r = std::abs(best.location[0]);
    best.location.assign(m, 0.0);
    best.location[0] = r;
  } else {
    const DomainKind domain = weight_.domain();
    const bool cube = domain == DomainKind::kInterval || domain == DomainKind::kCube;
    opts.sign_symmetric = cube;
    static constexpr int kKernelGrid[] = {0, 129, 33, 13};
    static constexpr int kNewtonGrid[] = {0, 17, 9, 5};
    const int row = m < 3 ? m : 3;
    opts.grid_per_axis = kernel ? kKernelGrid[row] : kNewtonGrid[row];
    best = maximize_over_domain(value_at, domain, m, opts);
  }
  SharpConstResult result = at_point(best.location);
  result.diagnostics.point_evaluations = best.evaluations + 1;
  return result;
}

SharpConstResult sharp_constant_p2_at_point(const ExponentSet& exponents, const WeightSpec& weight,
                                            std::span<const double> x0) {
  return SharpConstantProblem(exponents, weight, 2.0).at_point(x0);
}

SharpConstResult sharp_constant_general_p(const ExponentSet& exponents, const WeightSpec& weight,
                                          const std::optional<Point>& x0, double p,
                                          const SolverOptions& options) {
  const SharpConstantProblem problem(exponents, weight, p, options);
  return x0 ? problem.at_point(*x0) : problem.sup();
}

double exact_interval_p2(int n, double lambda) {
  require(n >= 0 && lambda >= 0.0, ErrorCode::kInvalidArgument,
          "exact_interval_p2: need n >= 0 and lambda >= 0");
  const double log_value = std::log(2.0 * lambda + 2.0 * n + 1.0) + std::lgamma(2.0 * lambda + n + 1.0) -
                           2.0 * lambda * std::log(2.0) - std::log(2.0 * lambda + 1.0) -
                           2.0 * std::lgamma(lambda + 0.5) - std::lgamma(n + 1.0);
  return std::exp(0.5 * log_value);
}

double exact_ball_p2(int n, int m, double lambda) {
  require(n >= 0 && m >= 1 && lambda >= 0.0, ErrorCode::kInvalidArgument,
          "exact_ball_p2: need n >= 0, m >= 1, lambda >= 0");
  const double log_value =
      std::log(2.0 * lambda + 2.0 * n + m) + std::lgamma(2.0 * lambda + n + m) -
      (2.0 * lambda + m - 1.0) * std::log(2.0) - 0.5 * (m - 1.0) * std::log(std::numbers::pi) -
      std::log(2.0 * lambda + m) - std::lgamma(lambda + 0.5) - std::lgamma(lambda + 0.5 * m) -
      std::lgamma(n + 1.0);
  return std::exp(0.5 * log_value);
}

double exact_entire_p2(int m, double lambda) {
  require(m >= 1 && lambda >= 0.0, ErrorCode::kInvalidArgument,
          "exact_entire_p2: need m >= 1 and lambda >= 0");
  const double log_value = std::lgamma(0.5 * m) - (2.0 * lambda + m - 1.0) * std::log(2.0) -
                           0.5 * m * std::log(std::numbers::pi) - std::log(2.0 * lambda + m) -
                           2.0 * std::lgamma(lambda + 0.5 * m);
  return std::exp(0.5 * log_value);
}

ReductionConstants reduction_constants(int m, double p, double lambda) {
  require(m >= 1 && p >= 1.0 && lambda >= 0.0, ErrorCode::kInvalidArgument,
          "reduction_constants: need m >= 1, p >= 1, lambda >= 0");
  const double pi = std::numbers::pi;
  const double inv_p = 1.0 / p;
  const double g = std::exp(std::lgamma(lambda + 0.5 * m) - std::lgamma(lambda + 0.5));
  ReductionConstants c;
  c.a1 = std::pow(2.0 * g / std::pow(pi, 0.5 * (m - 1)), inv_p);
  c.a2 = std::pow(2.0 * std::sqrt(pi) * g / std::tgamma(0.5 * m), inv_p);
  c.c17 = m >= 2 ? std::pow(std::tgamma(0.5 * (m - 1)) / std::pow(pi, 0.5 * (m - 1)), inv_p)
                 : std::numeric_limits<double>::quiet_NaN();
  c.c18 = std::pow(std::tgamma(0.5 * m) / std::pow(pi, 0.5 * m), inv_p);
  c.c19 = std::pow(g / std::pow(pi, 0.5 * (m - 1)), inv_p);
  const double id1 = std::abs(c.a1 - std::pow(2.0, inv_p) * c.c19) / c.a1;
  const double id2 = std::abs(c.a2 - c.a1 / c.c18) / c.a2;
  require(id1 < 1e-12 && id2 < 1e-12, ErrorCode::kInvalidArgument,
          "reduction_constants: internal identities violated");
  return c;
}

double ball_limit_p2(int m, double lambda) {
  require(m >= 1 && lambda >= 0.0, ErrorCode::kInvalidArgument,
          "ball_limit_p2: need m >= 1 and lambda >= 0");
  const double log_value = std::log(2.0) - (2.0 * lambda + m - 1.0) * std::log(2.0) -
                           0.5 * (m - 1.0) * std::log(std::numbers::pi) - std::log(2.0 * lambda + m) -
                           std::lgamma(lambda + 0.5) - std::lgamma(lambda + 0.5 * m);
  return std::exp(0.5 * log_value);
}

}  // namespace nikolskii
