#include "nikolskii/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "nikolskii/error.hpp"
#include "nikolskii/special.hpp"

namespace nikolskii {

namespace {

// Points needed for a Gauss rule exact to `degree`.
int gauss_points(int degree) { return degree / 2 + 1; }

struct AngularRule {
  int dim = 0;
  std::vector<double> directions;  // dim entries per direction
  std::vector<double> weights;
};

AngularRule angular_rule(int m, int degree) {
  AngularRule rule;
  rule.dim = m;
  if (m == 1) {
    rule.directions = {-1.0, 1.0};
    rule.weights = {1.0, 1.0};
    return rule;
  }
  const int k_phi = degree + 1;
  const double h = 2.0 * std::numbers::pi / k_phi;
  if (m == 2) {
    for (int k = 0; k < k_phi; ++k) {
      const double phi = h * k;
      rule.directions.push_back(std::cos(phi));
      rule.directions.push_back(std::sin(phi));
      rule.weights.push_back(h);
    }
    return rule;
  }
  // m == 3: Gauss–Legendre in z = cos(theta) times trapezoid in phi.
  const GaussRule1D z_rule = gauss_jacobi(gauss_points(degree), 0.0, 0.0);
  for (std::size_t i = 0; i < z_rule.nodes.size(); ++i) {
    const double z = z_rule.nodes[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int k = 0; k < k_phi; ++k) {
      const double phi = h * k;
      rule.directions.push_back(rho * std::cos(phi));
      rule.directions.push_back(rho * std::sin(phi));
      rule.directions.push_back(z);
      rule.weights.push_back(z_rule.weights[i] * h);
    }
  }
  return rule;
}

}  // namespace

double QuadratureRule::mass() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

bool is_even_integer(double p) {
  return p >= 2.0 && std::floor(p) == p && static_cast<long>(p) % 2 == 0;
}

int norm_rule_degree(int poly_degree, double p) {
  if (is_even_integer(p)) return static_cast<int>(p) * poly_degree;
  return std::max(4 * poly_degree + 40, 12 * poly_degree);
}

QuadratureRule interval_rule(double alpha, double beta, int degree) {
  require(degree >= 0, ErrorCode::kInvalidArgument, "interval_rule: degree must be >= 0");
  require(alpha >= 0.0 && beta > -1.0, ErrorCode::kNotIntegrable,
          "interval_rule: need alpha >= 0 and beta > -1");
  QuadratureRule rule;
  rule.domain = DomainKind::kInterval;
  rule.dim = 1;
  rule.exact_degree = degree;
  if (alpha == 0.0) {
    const GaussRule1D g = gauss_jacobi(gauss_points(degree), beta, beta);
    rule.nodes = g.nodes;
    rule.weights = g.weights;
    return rule;
  }
  // int P |u|^alpha (1-u^2)^beta = int_0^1 E(s) s^{(alpha-1)/2} (1-s)^beta ds,
  // E the even part of P in u^2; degree of E in s is floor(degree / 2).
  const GaussRule1D g = gauss_jacobi_unit(gauss_points(degree / 2), 0.5 * (alpha - 1.0), beta);
  const std::size_t n = g.nodes.size();
  rule.nodes.resize(2 * n);
  rule.weights.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = std::sqrt(g.nodes[i]);
    rule.nodes[n - 1 - i] = -u;
    rule.nodes[n + i] = u;
    rule.weights[n - 1 - i] = 0.5 * g.weights[i];
    rule.weights[n + i] = 0.5 * g.weights[i];
  }
  return rule;
}

QuadratureRule cube_rule(std::span<const double> alpha, std::span<const double> beta, int degree) {
  require(alpha.size() == beta.size() && !alpha.empty(), ErrorCode::kDimensionMismatch,
          "cube_rule: alpha and beta lengths differ");
  const int m = static_cast<int>(alpha.size());
  require(m <= kMaxCubeRuleDim, ErrorCode::kUnsupported, "cube_rule: dimension above desk-scale cap");
  std::vector<QuadratureRule> axes;
  double count = 1.0;
  for (int j = 0; j < m; ++j) {
    axes.push_back(interval_rule(alpha[j], beta[j], degree));
    count *= static_cast<double>(axes.back().size());
  }
  require(count <= static_cast<double>(kMaxRuleNodes), ErrorCode::kOverflow,
          "cube_rule: node count exceeds cap");
  QuadratureRule rule;
  rule.domain = m == 1 ? DomainKind::kInterval : DomainKind::kCube;
  rule.dim = m;
  rule.exact_degree = degree;
  const std::size_t total = static_cast<std::size_t>(count);
  rule.nodes.reserve(total * m);
  rule.weights.reserve(total);
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t n = 0; n < total; ++n) {
    double w = 1.0;
    for (int j = 0; j < m; ++j) {
      rule.nodes.push_back(axes[j].nodes[idx[j]]);
      w *= axes[j].weights[idx[j]];
    }
    rule.weights.push_back(w);
    for (int j = m - 1; j >= 0; --j) {
      if (++idx[j] < axes[j].size()) break;
      idx[j] = 0;
    }
  }
  return rule;
}

QuadratureRule ball_rule_with_exponent(int m, double exponent, int degree) {
  require(m >= 1 && m <= 3, ErrorCode::kUnsupported, "ball_rule: only m in {1,2,3} is supported");
  require(exponent > -1.0, ErrorCode::kNotIntegrable, "ball_rule: radial exponent must exceed -1");
  require(degree >= 0, ErrorCode::kInvalidArgument, "ball_rule: degree must be >= 0");
  if (m == 1) {
    QuadratureRule rule = interval_rule(0.0, exponent, degree);
    rule.domain = DomainKind::kBall;
    return rule;
  }
  // After the angular integral only even powers of r survive; with s = r^2,
  // r^{m-1} dr = (1/2) s^{(m-2)/2} ds.
  const GaussRule1D radial = gauss_jacobi_unit(gauss_points(degree / 2), 0.5 * (m - 2), exponent);
  const AngularRule angular = angular_rule(m, degree);
  QuadratureRule rule;
  rule.domain = DomainKind::kBall;
  rule.dim = m;
  rule.exact_degree = degree;
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = std::sqrt(radial.nodes[i]);
    for (std::size_t a = 0; a < angular.weights.size(); ++a) {
      for (int j = 0; j < m; ++j) rule.nodes.push_back(r * angular.directions[a * m + j]);
      rule.weights.push_back(0.5 * radial.weights[i] * angular.weights[a]);
    }
  }
  return rule;
}

QuadratureRule ball_rule(int m, double lambda, int degree) {
  require(lambda >= 0.0, ErrorCode::kNotIntegrable, "ball_rule: lambda must be >= 0");
  return ball_rule_with_exponent(m, lambda - 0.5, degree);
}

QuadratureRule disk_axial_rule(int ambient_dim, double lambda, int degree) {
  require(ambient_dim >= 2, ErrorCode::kInvalidArgument, "disk_axial_rule: ambient dim must be >= 2");
  require(lambda >= 0.0, ErrorCode::kNotIntegrable, "disk_axial_rule: lambda must be >= 0");
  const int m = ambient_dim;
  // Radial factor r^{m-1} (1-r^2)^{lambda-1/2} as for B^m. Angular factor
  // |sin phi|^{m-2}: folding phi and -phi gives (1-c^2)^{(m-3)/2} dc, c = cos phi.
  const GaussRule1D radial = gauss_jacobi_unit(gauss_points(degree / 2), 0.5 * (m - 2), lambda - 0.5);
  const double a = 0.5 * (m - 3);
  const GaussRule1D angular = gauss_jacobi(gauss_points(degree), a, a);
  QuadratureRule rule;
  rule.domain = DomainKind::kDisk;
  rule.dim = 2;
  rule.exact_degree = degree;
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = std::sqrt(radial.nodes[i]);
    for (std::size_t k = 0; k < angular.nodes.size(); ++k) {
      const double c = angular.nodes[k];
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      const double w = 0.5 * radial.weights[i] * angular.weights[k];
      for (double sign : {1.0, -1.0}) {
        rule.nodes.push_back(r * c);
        rule.nodes.push_back(sign * r * s);
        rule.weights.push_back(w);
      }
    }
  }
  return rule;
}

QuadratureRule sphere_rule(int m, int degree) {
  require(m >= 1 && m <= 3, ErrorCode::kUnsupported, "sphere_rule: only m in {1,2,3} is supported");
  const AngularRule angular = angular_rule(m, degree);
  QuadratureRule rule;
  rule.domain = DomainKind::kBall;
  rule.dim = m;
  rule.exact_degree = degree;
  rule.nodes = angular.directions;
  rule.weights = angular.weights;
  return rule;
}

QuadratureRule make_rule(const WeightSpec& weight, int degree) {
  switch (weight.kind()) {
    case WeightKind::kCoordinateProduct:
    case WeightKind::kGegenbauerInterval:
      return cube_rule(weight.alpha(), weight.beta(), degree);
    case WeightKind::kBallRadial: {
      QuadratureRule rule = ball_rule(weight.dim(), weight.lambda(), degree);
      if (weight.dim() == 1) rule.domain = DomainKind::kInterval;
      return rule;
    }
    case WeightKind::kDiskAxial: return disk_axial_rule(weight.ambient_dim(), weight.lambda(), degree);
    case WeightKind::kPowerRadial:
    case WeightKind::kCoordinatePower:
      fail(ErrorCode::kUnsupported, "make_rule: weights on R^m are bookkeeping only");
  }
  fail(ErrorCode::kUnsupported, "make_rule: unknown weight kind");
}

}  // namespace nikolskii
