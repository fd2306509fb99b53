#include "nikolskii/reductions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "nikolskii/error.hpp"
#include "nikolskii/quadrature.hpp"
#include "nikolskii/sharpconst.hpp"

namespace nikolskii {

namespace {

SolverOptions with_rule(const ReductionOptions& options, int degree, double p) {
  SolverOptions s = options.solver;
  if (options.rule_degree_per_degree > 0 && !is_even_integer(p)) {
    s.rule_degree = std::max(norm_rule_degree(degree, p), options.rule_degree_per_degree * std::max(degree, 1));
  }
  return s;
}

double relative(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

SpaceIdentityReport cube_space_identity(const ConvexBody& body, double a) {
  const int m = body.dim();
  const ExponentSet source = lattice_points(body, a);
  const ExponentSet target = lattice_points(body, 2.0 * a, true);
  SpaceIdentityReport report;
  report.source_count = source.size();
  report.target_count = target.size();
  std::vector<Polynomial> subs;
  for (int j = 0; j < m; ++j) {
    MultiIndex e(m, 0);
    e[j] = 2;
    subs.push_back(Polynomial::from_terms(m, {{MultiIndex(m, 0), 1.0}, {e, -2.0}}));
  }
  for (const MultiIndex& k : source.exponents()) {
    const Polynomial image = Polynomial::from_terms(m, {{k, 1.0}}).compose(subs).pruned();
    for (std::size_t i = 0; i < image.exponents().size(); ++i) {
      if (!target.contains(image.exponents()[i])) {
        ++report.violations;
        break;
      }
    }
  }
  // The image of x^k has leading term (-2)^{|k|} t^{2k}, so containment plus
  // equal counts gives equality of the spaces.
  report.holds = report.violations == 0 && report.source_count == report.target_count;
  return report;
}

CubeReductionReport cube_reduction_check(const ConvexBody& body, double a,
                                         const std::vector<double>& lambda, double p,
                                         const ReductionOptions& options) {
  const int m = body.dim();
  require(static_cast<int>(lambda.size()) == m, ErrorCode::kDimensionMismatch,
          "cube_reduction_check: one lambda per coordinate");
  require(a >= 0.0, ErrorCode::kInvalidArgument, "cube_reduction_check: a must be >= 0");
  CubeReductionReport report;
  report.space = cube_space_identity(body, a);

  std::vector<double> alpha_lhs(m, 0.0);
  std::vector<double> alpha_rhs(m);
  std::vector<double> beta(m);
  double lambda_sum = 0.0;
  for (int j = 0; j < m; ++j) {
    alpha_rhs[j] = 2.0 * lambda[j];
    beta[j] = lambda[j] - 0.5;
    lambda_sum += lambda[j];
  }
  const WeightSpec lhs_weight = WeightSpec::coordinate_product(alpha_lhs, beta);
  const WeightSpec rhs_weight = WeightSpec::coordinate_product(alpha_rhs, beta);
  const double scale = std::pow(4.0, -lambda_sum / p);

  const ExponentSet lhs_set = lattice_points(body, a);
  const ExponentSet rhs_even = lattice_points(body, 2.0 * a, true);
  const Point ones(m, 1.0);
  const Point origin(m, 0.0);

  const auto lhs = SharpConstantProblem(lhs_set, lhs_weight, p,
                                        with_rule(options, lhs_set.max_axis_degree(), p))
                       .at_point(ones);
  const auto rhs = SharpConstantProblem(rhs_even, rhs_weight, p,
                                        with_rule(options, rhs_even.max_axis_degree(), p))
                       .at_point(origin);
  report.lhs = lhs.value;
  report.rhs_even = scale * rhs.value;
  report.residual = relative(report.rhs_even, report.lhs);
  report.certified = lhs.diagnostics.certified && rhs.diagnostics.certified;
  if (options.include_full_space) {
    const ExponentSet rhs_set = lattice_points(body, 2.0 * a);
    const auto full = SharpConstantProblem(rhs_set, rhs_weight, p,
                                           with_rule(options, rhs_set.max_axis_degree(), p))
                          .at_point(origin);
    report.rhs_full = scale * full.value;
    report.residual_full = relative(report.rhs_full, report.lhs);
    report.certified = report.certified && full.diagnostics.certified;
  } else {
    report.rhs_full = std::numeric_limits<double>::quiet_NaN();
    report.residual_full = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

ExponentSet axial_even_set(int n) {
  std::vector<MultiIndex> exps;
  for (int k2 = 0; k2 <= n; k2 += 2) {
    for (int k1 = 0; k1 + k2 <= n; ++k1) exps.push_back({k1, k2});
  }
  return ExponentSet(2, std::move(exps));
}

BallReductionReport ball_reduction_check(int n, int m, double lambda, double p,
                                         const BallReductionOptions& options) {
  require(m == 2 || m == 3, ErrorCode::kUnsupported, "ball_reduction_check: m must be 2 or 3");
  require(n >= 0, ErrorCode::kInvalidArgument, "ball_reduction_check: n must be >= 0");
  const ReductionConstants c = reduction_constants(m, p, lambda);
  BallReductionReport report;

  const WeightSpec line_weight = WeightSpec::coordinate_product({0.0}, {0.5 * m + lambda - 1.0});
  const auto line = SharpConstantProblem(ExponentSet::total_degree(1, n), line_weight, p,
                                         with_rule(options, n, p))
                        .at_point(Point{1.0});
  report.rhs = c.c19 * line.value;

  const auto disk = SharpConstantProblem(axial_even_set(n), WeightSpec::disk_axial(m, lambda), p,
                                         with_rule(options, n, p))
                        .at_point(Point{1.0, 0.0});
  report.axial = c.c17 * disk.value;
  report.axial_residual = relative(report.axial, report.rhs);
  report.certified = line.diagnostics.certified && disk.diagnostics.certified;

  report.full_space = options.full_space == 1 || (options.full_space == -1 && (m == 2 || is_even_integer(p)));
  if (report.full_space) {
    Point x0(m, 0.0);
    x0[0] = 1.0;
    const auto full = SharpConstantProblem(ExponentSet::total_degree(m, n),
                                           WeightSpec::ball_radial(m, lambda), p,
                                           with_rule(options, n, p))
                          .at_point(x0);
    report.lhs = full.value;
    report.residual = relative(report.lhs, report.rhs);
    report.certified = report.certified && full.diagnostics.certified;
  } else {
    report.lhs = std::numeric_limits<double>::quiet_NaN();
    report.residual = report.axial_residual;
  }
  if (p == 2.0) {
    report.closed_form_residual =
        relative(exact_ball_p2(n, m, lambda), c.c19 * exact_interval_p2(n, lambda + 0.5 * (m - 1)));
  }
  return report;
}

Polynomial haar_symmetrize_axis(const Polynomial& poly, int angular_nodes) {
  const int m = poly.dim();
  require(m == 2 || m == 3, ErrorCode::kUnsupported, "haar_symmetrize_axis: m must be 2 or 3");
  const Polynomial mono = poly.to_monomial();
  if (m == 2) {
    const Polynomial flipped =
        mono.compose({Polynomial::coordinate(2, 0), Polynomial::coordinate(2, 1) * -1.0});
    return ((mono + flipped) * 0.5).pruned(1e-15);
  }
  const int nodes = angular_nodes > 0 ? angular_nodes : mono.degree() + 1;
  const Polynomial x1 = Polynomial::coordinate(3, 0);
  const Polynomial x2 = Polynomial::coordinate(3, 1);
  const Polynomial x3 = Polynomial::coordinate(3, 2);
  Polynomial sum = Polynomial::constant(3, 0.0);
  double scale = 0.0;
  for (double c : mono.coeffs()) scale = std::max(scale, std::abs(c));
  for (int k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / nodes;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    sum = sum + mono.compose({x1, x2 * ct - x3 * st, x2 * st + x3 * ct});
  }
  return (sum * (1.0 / nodes)).pruned(1e-14 * std::max(scale, 1.0));
}

}  // namespace nikolskii
