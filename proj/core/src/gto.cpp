#include "nikolskii/gto.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "nikolskii/error.hpp"
#include "nikolskii/special.hpp"

namespace nikolskii {

std::string to_string(GtoKind kind) {
  switch (kind) {
    case GtoKind::kInterval: return "interval";
    case GtoKind::kCube: return "cube";
    case GtoKind::kBallChebyshev: return "ball_chebyshev";
    case GtoKind::kBallGegenbauer: return "ball_gegenbauer";
  }
  return "unknown";
}

namespace {

QuadratureRule interval_measure(double lambda, int degree) {
  require(lambda >= 0.0, ErrorCode::kInvalidArgument, "gto: lambda must be >= 0");
  if (lambda == 0.0) {
    QuadratureRule atoms;
    atoms.domain = DomainKind::kInterval;
    atoms.dim = 1;
    atoms.nodes = {-1.0, 1.0};
    atoms.weights = {0.5, 0.5};
    atoms.exact_degree = std::numeric_limits<int>::max();
    return atoms;
  }
  QuadratureRule rule = interval_rule(0.0, lambda - 1.0, degree);
  const double c1 = std::exp(0.5 * std::log(std::numbers::pi) + std::lgamma(lambda) - std::lgamma(lambda + 0.5));
  for (double& w : rule.weights) w /= c1;
  return rule;
}

void scale_weights(QuadratureRule& rule, double factor) {
  for (double& w : rule.weights) w *= factor;
}

}  // namespace

GtoSpec GtoSpec::interval(double lambda, int inner_degree) {
  GtoSpec spec;
  spec.kind_ = GtoKind::kInterval;
  spec.dim_ = 1;
  spec.lambda_ = {lambda};
  spec.inner_degree_ = inner_degree;
  spec.rules_.push_back(interval_measure(lambda, inner_degree));
  return spec;
}

GtoSpec GtoSpec::cube(std::vector<double> lambda, int inner_degree) {
  require(!lambda.empty(), ErrorCode::kInvalidArgument, "gto cube: need at least one coordinate");
  GtoSpec spec;
  spec.kind_ = GtoKind::kCube;
  spec.dim_ = static_cast<int>(lambda.size());
  spec.inner_degree_ = inner_degree;
  for (double l : lambda) spec.rules_.push_back(interval_measure(l, inner_degree));
  spec.lambda_ = std::move(lambda);
  return spec;
}

GtoSpec GtoSpec::ball_chebyshev(int m, int inner_degree) {
  require(m >= 1 && m <= 3, ErrorCode::kUnsupported, "gto ball: m must be in {1,2,3}");
  GtoSpec spec;
  spec.kind_ = GtoKind::kBallChebyshev;
  spec.dim_ = m;
  spec.lambda_ = {0.0};
  spec.inner_degree_ = inner_degree;
  QuadratureRule rule = sphere_rule(m, inner_degree);
  const double c2 = 2.0 * std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m);
  scale_weights(rule, 1.0 / c2);
  spec.rules_.push_back(std::move(rule));
  return spec;
}

GtoSpec GtoSpec::ball_gegenbauer(int m, double lambda, int inner_degree) {
  require(m >= 1 && m <= 3, ErrorCode::kUnsupported, "gto ball: m must be in {1,2,3}");
  require(lambda > 0.0, ErrorCode::kInvalidArgument,
          "gto ball_gegenbauer: lambda must be > 0 (use ball_chebyshev for lambda = 0)");
  GtoSpec spec;
  spec.kind_ = GtoKind::kBallGegenbauer;
  spec.dim_ = m;
  spec.lambda_ = {lambda};
  spec.inner_degree_ = inner_degree;
  QuadratureRule rule = ball_rule_with_exponent(m, lambda - 1.0, inner_degree);
  const double c3 = std::exp(0.5 * m * std::log(std::numbers::pi) + std::lgamma(lambda) -
                             std::lgamma(lambda + 0.5 * m));
  scale_weights(rule, 1.0 / c3);
  spec.rules_.push_back(std::move(rule));
  return spec;
}

const QuadratureRule& GtoSpec::inner_rule(int axis) const {
  return rules_.at(kind_ == GtoKind::kCube ? static_cast<std::size_t>(axis) : 0);
}

WeightSpec GtoSpec::weight() const {
  switch (kind_) {
    case GtoKind::kInterval: return WeightSpec::gegenbauer_interval(lambda_[0]);
    case GtoKind::kCube: return WeightSpec::gegenbauer_cube(lambda_);
    case GtoKind::kBallChebyshev: return WeightSpec::ball_radial(dim_, 0.0);
    case GtoKind::kBallGegenbauer: return WeightSpec::ball_radial(dim_, lambda_[0]);
  }
  fail(ErrorCode::kUnsupported, "gto: unknown kind");
}

DomainKind GtoSpec::domain() const {
  switch (kind_) {
    case GtoKind::kInterval: return DomainKind::kInterval;
    case GtoKind::kCube: return dim_ == 1 ? DomainKind::kInterval : DomainKind::kCube;
    default: return dim_ == 1 ? DomainKind::kInterval : DomainKind::kBall;
  }
}

GtoSpec GtoSpec::with_inner_degree(int degree) const {
  switch (kind_) {
    case GtoKind::kInterval: return interval(lambda_[0], degree);
    case GtoKind::kCube: return cube(lambda_, degree);
    case GtoKind::kBallChebyshev: return ball_chebyshev(dim_, degree);
    case GtoKind::kBallGegenbauer: return ball_gegenbauer(dim_, lambda_[0], degree);
  }
  fail(ErrorCode::kUnsupported, "gto: unknown kind");
}

double apply_interval(const GtoSpec& spec, const ScalarField& f, double t, double x) {
  require(spec.kind() == GtoKind::kInterval, ErrorCode::kInvalidArgument,
          "apply_interval: spec is not an interval operator");
  const double t1 = std::clamp(t, -1.0, 1.0);
  const double x1 = std::clamp(x, -1.0, 1.0);
  const double spread = std::sqrt((1.0 - t1 * t1) * (1.0 - x1 * x1));
  const QuadratureRule& rule = spec.inner_rule();
  double sum = 0.0;
  double y = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    y = t1 * x1 + rule.nodes[k] * spread;
    sum += rule.weights[k] * f(std::span<const double>(&y, 1));
  }
  return sum;
}

double apply_cube(const GtoSpec& spec, const ScalarField& f, std::span<const double> t,
                  std::span<const double> x) {
  require(spec.kind() == GtoKind::kCube, ErrorCode::kInvalidArgument,
          "apply_cube: spec is not a cube operator");
  const int m = spec.dim();
  require(static_cast<int>(t.size()) == m && static_cast<int>(x.size()) == m,
          ErrorCode::kDimensionMismatch, "apply_cube: t and x must have the spec dimension");
  std::vector<double> centre(m);
  std::vector<double> spread(m);
  for (int j = 0; j < m; ++j) {
    const double tj = std::clamp(t[j], -1.0, 1.0);
    const double xj = std::clamp(x[j], -1.0, 1.0);
    centre[j] = tj * xj;
    spread[j] = std::sqrt((1.0 - tj * tj) * (1.0 - xj * xj));
  }
  Point y(m);
  double sum = 0.0;
  auto recurse = [&](auto&& self, int j, double weight) -> void {
    if (j == m) {
      sum += weight * f(y);
      return;
    }
    const QuadratureRule& rule = spec.inner_rule(j);
    if (spread[j] == 0.0) {  // the measure collapses onto one point
      y[j] = centre[j];
      self(self, j + 1, weight);
      return;
    }
    for (std::size_t k = 0; k < rule.size(); ++k) {
      y[j] = centre[j] + rule.nodes[k] * spread[j];
      self(self, j + 1, weight * rule.weights[k]);
    }
  };
  recurse(recurse, 0, 1.0);
  return sum;
}

Eigen::MatrixXd householder_frame(std::span<const double> x) {
  const auto m = static_cast<Eigen::Index>(x.size());
  Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(x.data(), m);
  const double r = v.norm();
  if (r == 0.0) return Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd w = -v / r;
  w(0) += 1.0;
  const double w2 = w.squaredNorm();
  if (w2 < 1e-300) return Eigen::MatrixXd::Identity(m, m);
  return Eigen::MatrixXd::Identity(m, m) - (2.0 / w2) * w * w.transpose();
}

double apply_ball(const GtoSpec& spec, const ScalarField& f, double t, std::span<const double> x,
                  const Eigen::MatrixXd* frame) {
  require(spec.kind() == GtoKind::kBallChebyshev || spec.kind() == GtoKind::kBallGegenbauer,
          ErrorCode::kInvalidArgument, "apply_ball: spec is not a ball operator");
  const int m = spec.dim();
  require(static_cast<int>(x.size()) == m, ErrorCode::kDimensionMismatch,
          "apply_ball: x must have the spec dimension");
  const Eigen::MatrixXd h = frame ? *frame : householder_frame(x);
  require(h.rows() == m && h.cols() == m, ErrorCode::kDimensionMismatch, "apply_ball: bad frame");
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double t1 = std::clamp(t, -1.0, 1.0);
  if (std::abs(t1) == 1.0) {
    Point y(x.begin(), x.end());
    for (double& v : y) v *= t1;
    return f(y);
  }
  const double lift = std::sqrt(std::max(0.0, 1.0 - t1 * t1));
  // Rows of D(x) H(x), premultiplied by sqrt(1 - t^2).
  Eigen::MatrixXd dh = lift * h;
  dh.row(0) *= std::sqrt(std::max(0.0, 1.0 - r2));
  const QuadratureRule& rule = spec.inner_rule();
  Point y(m);
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const std::span<const double> s = rule.node(k);
    for (int j = 0; j < m; ++j) {
      double v = t1 * x[j];
      for (int i = 0; i < m; ++i) v += s[i] * dh(i, j);
      y[j] = v;
    }
    sum += rule.weights[k] * f(y);
  }
  return sum;
}

double apply_gto(const GtoSpec& spec, const ScalarField& f, std::span<const double> t,
                 std::span<const double> x) {
  switch (spec.kind()) {
    case GtoKind::kInterval:
      require(t.size() == 1 && x.size() == 1, ErrorCode::kDimensionMismatch,
              "apply_gto: interval operator takes scalar t and x");
      return apply_interval(spec, f, t[0], x[0]);
    case GtoKind::kCube: return apply_cube(spec, f, t, x);
    default:
      require(t.size() == 1, ErrorCode::kDimensionMismatch, "apply_gto: ball operator takes scalar t");
      return apply_ball(spec, f, t[0], x);
  }
}

namespace {

bool cube_like(const GtoSpec& spec) {
  return spec.kind() == GtoKind::kInterval || spec.kind() == GtoKind::kCube;
}

int space_degree(const GtoSpec& spec, const ExponentSet& exponents) {
  return cube_like(spec) ? exponents.max_axis_degree() : exponents.total_degree();
}

// Inner rules exact to the polynomial degree give the same operator on the space.
GtoSpec fitted(const GtoSpec& spec, int degree) {
  const int inner = std::max(degree, 1);
  return spec.inner_degree() > inner ? spec.with_inner_degree(inner) : spec;
}

ScalarField as_field(const Polynomial& p) {
  return [&p](std::span<const double> y) { return p.evaluate(y); };
}

}  // namespace

GtoMatrix gto_matrix(const GtoSpec& full_spec, const ExponentSet& exponents, std::span<const double> t) {
  require(exponents.dim() == full_spec.dim(), ErrorCode::kDimensionMismatch,
          "gto_matrix: exponent set and operator dimensions differ");
  const int m = full_spec.dim();
  const int deg = space_degree(full_spec, exponents);
  const GtoSpec spec = fitted(full_spec, deg);
  QuadratureRule grid;
  if (cube_like(spec)) {
    const std::vector<double> zeros(m, 0.0);
    grid = cube_rule(zeros, zeros, 2 * deg + 2);
  } else {
    grid = ball_rule(m, 0.5, 2 * deg + 2);
  }
  const Eigen::MatrixXd design = basis_matrix(exponents, Basis::kMonomial, grid.nodes);
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  GtoMatrix out;
  out.matrix.resize(static_cast<Eigen::Index>(exponents.size()), static_cast<Eigen::Index>(exponents.size()));
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const Polynomial mono = Polynomial::from_terms(m, {{exponents[k], 1.0}});
    Eigen::VectorXd values(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      values(static_cast<Eigen::Index>(i)) = apply_gto(spec, as_field(mono), t, grid.node(i));
    }
    const Eigen::VectorXd coef = qr.solve(values);
    out.matrix.col(static_cast<Eigen::Index>(k)) = coef;
    const double scale = std::max(values.cwiseAbs().maxCoeff(), 1e-300);
    out.residual = std::max(out.residual, (design * coef - values).cwiseAbs().maxCoeff() / scale);
  }
  return out;
}

ContractionReport contraction_check(const GtoSpec& full_spec, const ExponentSet& exponents, double p,
                                    int trials, std::uint64_t seed, int rule_degree) {
  const GtoSpec spec = fitted(full_spec, space_degree(full_spec, exponents));
  require(exponents.dim() == spec.dim(), ErrorCode::kDimensionMismatch,
          "contraction_check: exponent set and operator dimensions differ");
  require(trials >= 1, ErrorCode::kInvalidArgument, "contraction_check: trials must be >= 1");
  const int m = spec.dim();
  const int degree = rule_degree > 0 ? rule_degree : norm_rule_degree(space_degree(spec, exponents), p);
  const QuadratureRule rule = make_rule(spec.weight(), degree);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);

  ContractionReport report;
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.trials = trials;
  const std::size_t t_dim = spec.kind() == GtoKind::kCube ? static_cast<std::size_t>(m) : 1;
  std::vector<double> before(rule.size());
  std::vector<double> after(rule.size());
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> coeffs(exponents.size());
    for (double& c : coeffs) c = normal(rng);
    const Polynomial poly(exponents, coeffs, Basis::kChebyshev);
    Point t(t_dim);
    for (double& v : t) v = uniform(rng);
    for (std::size_t i = 0; i < rule.size(); ++i) {
      before[i] = poly.evaluate(rule.node(i));
      after[i] = apply_gto(spec, as_field(poly), t, rule.node(i));
    }
    const double ratio = weighted_norm(after, rule, p) / weighted_norm(before, rule, p);
    if (ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.worst_t = t;
    }
    report.min_ratio = std::min(report.min_ratio, ratio);
  }
  return report;
}

namespace {

std::vector<double> line_grid(int grid) {
  std::vector<double> g(grid);
  for (int i = 0; i < grid; ++i) g[i] = grid == 1 ? 0.0 : -1.0 + 2.0 * i / (grid - 1);
  return g;
}

// Deterministic points of the closed ball: origin, sphere points, interior.
std::vector<Point> ball_samples(int m, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<Point> out{Point(m, 0.0)};
  for (int i = 1; i < count; ++i) {
    Point d(m);
    double norm = 0.0;
    for (double& v : d) {
      v = normal(rng);
      norm += v * v;
    }
    norm = std::sqrt(norm);
    const double r = i % 3 == 0 ? 1.0 : std::pow(uniform(rng), 1.0 / m);
    for (double& v : d) v *= r / norm;
    out.push_back(d);
  }
  return out;
}

}  // namespace

double eigen_residual_interval(double lambda, int max_degree, int grid) {
  const GtoSpec spec = GtoSpec::interval(lambda, std::max(max_degree, 1));
  const std::vector<double> pts = line_grid(grid);
  double worst = 0.0;
  for (int n = 0; n <= max_degree; ++n) {
    const double at_one = gegenbauer_at_one(n, lambda);
    const ScalarField f = [&](std::span<const double> y) { return gegenbauer(n, lambda, y[0]); };
    for (double t : pts) {
      for (double x : pts) {
        const double expected = gegenbauer(n, lambda, t) * gegenbauer(n, lambda, x) / at_one;
        worst = std::max(worst, std::abs(apply_interval(spec, f, t, x) - expected) / at_one);
      }
    }
  }
  return worst;
}

double eigen_residual_cube(const std::vector<double>& lambda, int max_degree, int grid) {
  const int m = static_cast<int>(lambda.size());
  const GtoSpec spec = GtoSpec::cube(lambda, std::max(max_degree, 1));
  const std::vector<double> pts = line_grid(grid);
  const ExponentSet degrees = ExponentSet::total_degree(m, max_degree);
  double worst = 0.0;
  Point t(m);
  Point x(m);
  for (const MultiIndex& n : degrees.exponents()) {
    double at_one = 1.0;
    for (int j = 0; j < m; ++j) at_one *= gegenbauer_at_one(n[j], lambda[j]);
    const ScalarField f = [&](std::span<const double> y) {
      double v = 1.0;
      for (int j = 0; j < m; ++j) v *= gegenbauer(n[j], lambda[j], y[j]);
      return v;
    };
    for (int a = 0; a < grid; ++a) {
      for (int b = 0; b < grid; ++b) {
        double expected = 1.0;
        for (int j = 0; j < m; ++j) {
          t[j] = pts[(a + 7 * j) % grid];
          x[j] = pts[(b + 3 * j) % grid];
          expected *= gegenbauer(n[j], lambda[j], t[j]) * gegenbauer(n[j], lambda[j], x[j]) /
                      gegenbauer_at_one(n[j], lambda[j]);
        }
        worst = std::max(worst, std::abs(apply_cube(spec, f, t, x) - expected) / at_one);
      }
    }
  }
  return worst;
}

double eigen_residual_ball_chebyshev(int m, int max_degree, int grid) {
  require(m == 2 || m == 3, ErrorCode::kUnsupported, "eigen_residual_ball_chebyshev: m must be 2 or 3");
  const GtoSpec spec = GtoSpec::ball_chebyshev(m, std::max(max_degree, 1));
  const std::vector<double> ts = line_grid(grid);
  const std::vector<Point> xs = ball_samples(m, grid, 7);
  const double mu = 0.5 * (m - 1);
  double worst = 0.0;
  for (int l = 0; l <= max_degree; ++l) {
    std::vector<HarmonicIndex> harmonics;
    if (m == 2) {
      harmonics.push_back({l, false});
      if (l > 0) harmonics.push_back({l, true});
    } else {
      for (int k = 0; k <= l; ++k) {
        harmonics.push_back({k, false});
        if (k > 0) harmonics.push_back({k, true});
      }
    }
    for (int big_n = 0; l + 2 * big_n <= max_degree; ++big_n) {
      const int n = l + 2 * big_n;
      for (const HarmonicIndex& h : harmonics) {
        const Polynomial phi = ball_basis(l, big_n, m, h);
        double scale = 0.0;
        for (const Point& x : xs) scale = std::max(scale, std::abs(phi.evaluate(x)));
        scale = std::max(scale, 1e-300);
        for (double t : ts) {
          const double eigenvalue = gegenbauer(n, mu, t) / gegenbauer_at_one(n, mu);
          for (const Point& x : xs) {
            const double got = apply_ball(spec, as_field(phi), t, x);
            worst = std::max(worst, std::abs(got - eigenvalue * phi.evaluate(x)) / scale);
          }
        }
      }
    }
  }
  return worst;
}

double eigen_residual_ball_gegenbauer(int m, double lambda, int max_degree, int grid, int directions,
                                      std::uint64_t seed) {
  const GtoSpec spec = GtoSpec::ball_gegenbauer(m, lambda, std::max(max_degree, 1));
  const std::vector<double> ts = line_grid(grid);
  const std::vector<Point> xs = ball_samples(m, grid, seed + 11);
  const double mu = lambda + 0.5 * (m - 1);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst = 0.0;
  for (int d = 0; d < directions; ++d) {
    Point y(m);
    double norm = 0.0;
    for (double& v : y) {
      v = normal(rng);
      norm += v * v;
    }
    for (double& v : y) v /= std::sqrt(norm);
    auto dot = [&](std::span<const double> v) {
      double s = 0.0;
      for (int j = 0; j < m; ++j) s += v[j] * y[j];
      return s;
    };
    for (int n = 0; n <= max_degree; ++n) {
      const double at_one = gegenbauer_at_one(n, mu);
      const ScalarField f = [&](std::span<const double> v) { return gegenbauer(n, mu, dot(v)); };
      for (double t : ts) {
        for (const Point& x : xs) {
          const double expected = gegenbauer(n, mu, t) * gegenbauer(n, mu, dot(x)) / at_one;
          worst = std::max(worst, std::abs(apply_ball(spec, f, t, x) - expected) / at_one);
        }
      }
    }
  }
  return worst;
}

BoundaryTransfer transfer_to_boundary(const GtoSpec& spec, std::span<const double> y0) {
  require(static_cast<int>(y0.size()) == spec.dim(), ErrorCode::kDimensionMismatch,
          "transfer_to_boundary: point dimension mismatch");
  BoundaryTransfer out;
  if (cube_like(spec)) {
    for (double v : y0) {
      out.t.push_back(std::abs(v));
      out.x0.push_back(v < 0.0 ? -1.0 : 1.0);
    }
    if (spec.kind() == GtoKind::kInterval) out.t.resize(1);
    return out;
  }
  // On the sphere the ball operators average over the tangential disk, so
  // no (t, x0) reproduces a point value.
  throw Error(ErrorCode::kUnsupported, "transfer_to_boundary: defined for interval and cube operators only");
}

}  // namespace nikolskii
