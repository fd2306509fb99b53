#include "nikolskii/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "nikolskii/error.hpp"
#include "nikolskii/quadrature.hpp"
#include "nikolskii/sharpconst.hpp"
#include "nikolskii/weights.hpp"

namespace nikolskii {

std::string to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::kCube: return "cube";
    case ScanKind::kPoint: return "point";
    case ScanKind::kBall: return "ball";
  }
  return "unknown";
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<int> scan_grid(int n_max, const ScanOptions& options) {
  if (!options.grid.empty()) {
    for (int n : options.grid) {
      require(n >= 0, ErrorCode::kInvalidArgument, "scan: grid values must be >= 0");
    }
    return options.grid;
  }
  require(n_max >= 1, ErrorCode::kInvalidArgument, "scan: n_max must be >= 1");
  std::vector<int> grid;
  for (int n = 2; n <= n_max; n += 2) grid.push_back(n);
  if (grid.empty()) grid.push_back(n_max);
  return grid;
}

SolverOptions solver_for(const ScanOptions& options, int degree, double p) {
  SolverOptions solver = options.solver;
  const bool even = p == std::floor(p) && static_cast<long>(p) % 2 == 0;
  if (!even && options.rule_degree_per_degree > 0 && solver.rule_degree == 0) {
    solver.rule_degree = std::max(norm_rule_degree(degree, p), options.rule_degree_per_degree * degree);
  }
  return solver;
}

double spread(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

void record(ScanResult& result, int n, const SharpConstResult& point, double factor = 1.0) {
  result.grid.push_back(n);
  result.raw.push_back(factor * point.value);
  result.scaled.push_back(n > 0 ? factor * point.value * std::pow(n, -result.kappa) : kNaN);
  result.certified.push_back(point.diagnostics.certified);
}

void finish(ScanResult& result) {
  std::vector<int> ns;
  std::vector<double> s;
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    if (result.grid[i] > 0) {
      ns.push_back(result.grid[i]);
      s.push_back(result.scaled[i]);
    }
  }
  const std::size_t count = s.size();
  if (count < 2) {
    result.extrapolated = count == 1 ? s[0] : (result.raw.empty() ? kNaN : result.raw.back());
    result.low_confidence = true;
  } else {
    const double n1 = ns[count - 2];
    const double n2 = ns[count - 1];
    result.extrapolated = (n2 * s[count - 1] - n1 * s[count - 2]) / (n2 - n1);
  }
  const std::size_t k = std::min<std::size_t>(3, count);
  const std::vector<double> head(s.begin(), s.begin() + static_cast<long>(k));
  const std::vector<double> tail(s.end() - static_cast<long>(k), s.end());
  result.head_spread = spread(head);
  result.tail_spread = spread(tail);
  if (count >= 2) {
    const double first = ns[count - k];
    const double last = ns[count - 1];
    const double width = result.tail_spread * last / (last - first);
    const auto [lo, hi] = std::minmax_element(tail.begin(), tail.end());
    const double slack = 1e-14 * std::abs(result.extrapolated);
    result.within_bracket =
        result.extrapolated >= *lo - width - slack && result.extrapolated <= *hi + width + slack;
  }
  for (std::size_t i = result.certified.size() >= 2 ? result.certified.size() - 2 : 0;
       i < result.certified.size(); ++i) {
    if (!result.certified[i]) result.low_confidence = true;
  }
  if (!result.within_bracket) result.low_confidence = true;

  if (result.predicted) {
    const double limit = *result.predicted;
    result.gap = std::abs(result.extrapolated - limit) / std::abs(limit);
    if (count >= 3) {
      const double c = std::max(std::abs(s[0] - limit) * ns[0], std::abs(s[1] - limit) * ns[1]);
      bool ok = true;
      for (std::size_t i = 2; i < count; ++i) {
        ok = ok && std::abs(s[i] - limit) * ns[i] <= c * (1.0 + 1e-9) + 1e-12;
      }
      result.envelope_ok = ok;
    }
  } else {
    result.gap = kNaN;
  }
}

bool unit_cube(const ConvexBody& body) {
  return body.kind() == BodyKind::kCube && body.radius() == 1.0;
}

}  // namespace

ScanResult cube_limit_scan(const ConvexBody& body, const std::vector<double>& lambda, double p,
                           int n_max, const ScanOptions& options) {
  const int m = body.dim();
  require(static_cast<int>(lambda.size()) == m, ErrorCode::kDimensionMismatch,
          "cube_limit_scan: lambda must have one entry per coordinate");
  require(p >= 1.0, ErrorCode::kInvalidArgument, "cube_limit_scan: p must be >= 1");
  require(pi_condition_check(body, 256).holds, ErrorCode::kInvalidArgument,
          "cube_limit_scan: body violates the Pi-condition");
  ScanResult result;
  result.kind = ScanKind::kCube;
  result.p = p;
  double sum = 0.0;
  for (double l : lambda) sum += l;
  result.kappa = (m + 2.0 * sum) / p;
  const WeightSpec weight = WeightSpec::gegenbauer_cube(lambda);
  const Point vertex(m, 1.0);
  for (int a : scan_grid(n_max, options)) {
    const ExponentSet set = lattice_points(body, a);
    const SharpConstantProblem problem(set, weight, p, solver_for(options, set.max_axis_degree(), p));
    record(result, a, problem.at_point(vertex));
  }
  if (p == 2.0 && unit_cube(body)) {
    double limit = std::pow(2.0, 0.5 * m);
    for (double l : lambda) limit *= exact_entire_p2(1, l);
    result.predicted = limit;
  }
  finish(result);
  return result;
}

ScanResult point_limit_scan(const ConvexBody& body, const std::vector<double>& alpha,
                            const std::vector<double>& beta, double p, int n_max,
                            const ScanOptions& options) {
  const int m = body.dim();
  require(static_cast<int>(alpha.size()) == m && static_cast<int>(beta.size()) == m,
          ErrorCode::kDimensionMismatch, "point_limit_scan: alpha and beta need one entry per coordinate");
  require(p >= 1.0, ErrorCode::kInvalidArgument, "point_limit_scan: p must be >= 1");
  for (int j = 0; j < m; ++j) {
    require(alpha[j] >= 0.0 && beta[j] >= -0.5, ErrorCode::kInvalidArgument,
            "point_limit_scan: need alpha_j >= 0 and beta_j >= -1/2");
  }
  ScanResult result;
  result.kind = ScanKind::kPoint;
  result.p = p;
  double sum = 0.0;
  for (double a : alpha) sum += a;
  result.kappa = (m + sum) / p;
  const WeightSpec weight = WeightSpec::coordinate_product(alpha, beta);
  const Point origin(m, 0.0);
  for (int a : scan_grid(n_max, options)) {
    const ExponentSet set = lattice_points(body, a);
    const SharpConstantProblem problem(set, weight, p, solver_for(options, set.max_axis_degree(), p));
    record(result, a, problem.at_point(origin));
  }
  if (p == 2.0 && unit_cube(body)) {
    double limit = 1.0;
    for (double a : alpha) limit *= exact_entire_p2(1, 0.5 * a);
    result.predicted = limit;
  }
  finish(result);
  return result;
}

ScanResult ball_limit_scan(double lambda, double p, int m, int n_max, const ScanOptions& options) {
  require(m >= 1 && m <= 3, ErrorCode::kUnsupported, "ball_limit_scan: m must be in {1,2,3}");
  require(p >= 1.0 && lambda >= 0.0, ErrorCode::kInvalidArgument,
          "ball_limit_scan: need p >= 1 and lambda >= 0");
  ScanResult result;
  result.kind = ScanKind::kBall;
  result.p = p;
  result.kappa = (m + 2.0 * lambda) / p;
  const ReductionConstants c = reduction_constants(m, p, lambda);
  const WeightSpec line = WeightSpec::coordinate_product({0.0}, {0.5 * m + lambda - 1.0});
  for (int n : scan_grid(n_max, options)) {
    const SharpConstantProblem problem(ExponentSet::total_degree(1, n), line, p, solver_for(options, n, p));
    record(result, n, problem.at_point(Point{1.0}), c.c19);
  }
  if (p == 2.0) result.predicted = c.a2 * exact_entire_p2(m, lambda);
  finish(result);
  return result;
}

ChainReport chain_check(int m, double lambda) {
  require(m >= 1 && lambda >= 0.0, ErrorCode::kInvalidArgument, "chain_check: need m >= 1, lambda >= 0");
  const ReductionConstants c = reduction_constants(m, 2.0, lambda);
  ChainReport report;
  report.predicted = c.a2 * exact_entire_p2(m, lambda);
  report.analytic_limit = ball_limit_p2(m, lambda);
  report.analytic_residual = std::abs(report.analytic_limit - report.predicted) / report.predicted;
  const double kappa = 0.5 * (m + 2.0 * lambda);
  auto scaled = [&](int n) { return exact_ball_p2(n, m, lambda) * std::pow(n, -kappa); };
  report.numeric_value = scaled(report.numeric_n);
  report.numeric_residual = std::abs(report.numeric_value - report.predicted) / report.predicted;
  for (int n = 10; n <= 10'000; ++n) {
    const double bound = 3.0 * (2.0 * lambda + m) / n;
    report.envelope_ratio = std::max(report.envelope_ratio, std::abs(scaled(n) - report.predicted) / bound);
  }
  return report;
}

SubstitutionReport substitution_gap_check(double tau, const std::vector<double>& alpha,
                                          const std::vector<double>& beta, long trials,
                                          std::uint64_t seed) {
  require(tau > 0.0 && tau < 1.0, ErrorCode::kInvalidArgument, "substitution_gap_check: tau must be in (0,1)");
  require(alpha.size() == beta.size() && !alpha.empty(), ErrorCode::kDimensionMismatch,
          "substitution_gap_check: alpha and beta must have equal nonzero length");
  require(trials >= 1, ErrorCode::kInvalidArgument, "substitution_gap_check: trials must be >= 1");
  const std::size_t m = alpha.size();
  SubstitutionReport report;
  report.c13 = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    report.c13 = std::max({report.c13, alpha[j], 2.0 * beta[j] + 1.0});
  }
  report.max_violation = -std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
  const double tau2 = tau * tau;
  std::vector<double> v(m);
  for (long trial = 0; trial < trials; ++trial) {
    for (double& x : v) x = trial == 0 ? 0.0 : uniform(rng);
    double lead = 1.0;
    double sub = 1.0;
    double sq = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double c = std::cos(v[j]);
      lead *= std::pow(std::abs(v[j]), alpha[j]);
      sub *= std::pow(std::abs(std::sin(v[j])), alpha[j]) * std::pow(tau2 * c * c + 1.0 - tau2, beta[j]) * c;
      sq += v[j] * v[j];
    }
    const double gap = lead - sub;
    report.max_violation = std::max({report.max_violation, -gap, gap - report.c13 * lead * sq});
  }
  report.samples = trials;
  return report;
}

}  // namespace nikolskii
