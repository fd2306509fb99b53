#include "nikolskii/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nikolskii/error.hpp"

namespace nikolskii {

double weighted_norm(std::span<const double> values, const QuadratureRule& rule, double p) {
  require(rule.size() > 0, ErrorCode::kInvalidArgument, "weighted_norm: empty rule");
  require(values.size() == rule.size(), ErrorCode::kDimensionMismatch,
          "weighted_norm: one value per node required");
  require(p >= 1.0, ErrorCode::kInvalidArgument, "weighted_norm: p must be >= 1");
  if (std::isinf(p)) {
    double best = 0.0;
    for (double v : values) best = std::max(best, std::abs(v));
    return best;
  }
  double sum = 0.0;
  if (p == 2.0) {
    for (std::size_t i = 0; i < values.size(); ++i) sum += rule.weights[i] * values[i] * values[i];
    return std::sqrt(sum);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum += rule.weights[i] * std::pow(std::abs(values[i]), p);
  }
  return std::pow(sum, 1.0 / p);
}

double weighted_norm(const Polynomial& poly, const QuadratureRule& rule, double p) {
  require(poly.dim() == rule.dim, ErrorCode::kDimensionMismatch,
          "weighted_norm: polynomial and rule dimensions differ");
  std::vector<double> values(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) values[i] = poly.evaluate(rule.node(i));
  return weighted_norm(values, rule, p);
}

double weighted_norm(const Polynomial& poly, const WeightSpec& weight, double p) {
  if (std::isinf(p)) return sup_norm(poly, weight.domain()).value;
  const bool per_axis = weight.kind() == WeightKind::kCoordinateProduct ||
                        weight.kind() == WeightKind::kGegenbauerInterval;
  const int deg = per_axis ? poly.exponents().max_axis_degree() : poly.degree();
  return weighted_norm(poly, make_rule(weight, norm_rule_degree(deg, p)), p);
}

namespace {

bool is_ball_like(DomainKind domain) {
  return domain == DomainKind::kBall || domain == DomainKind::kDisk;
}

// Ball points are parametrized by (r, angles); cube points by themselves.
struct Chart {
  DomainKind domain;
  int dim;
  bool half = false;

  bool polar() const { return is_ball_like(domain) && dim >= 2; }

  Point to_point(const Point& u) const {
    if (!polar()) return u;
    const double r = u[0];
    if (dim == 2) return {r * std::cos(u[1]), r * std::sin(u[1])};
    const double ct = u[1];
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    return {r * st * std::cos(u[2]), r * st * std::sin(u[2]), r * ct};
  }

  // Bounds of each chart coordinate.
  std::pair<double, double> bounds(int j) const {
    if (!polar()) return {half ? 0.0 : -1.0, 1.0};
    if (j == 0) return {0.0, 1.0};
    if (dim == 3 && j == 1) return {-1.0, 1.0};
    return {-std::numbers::pi, std::numbers::pi};
  }

  bool periodic(int j) const { return polar() && j == dim - 1; }
};

double golden_section(const std::function<double(double)>& g, double lo, double hi, double tol,
                      int& evaluations) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = g(x1);
  double f2 = g(x2);
  evaluations += 2;
  while (b - a > tol) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = g(x2);
    }
    ++evaluations;
  }
  return f1 >= f2 ? x1 : x2;
}

std::vector<Point> chart_grid(const Chart& chart, int per_axis, std::size_t cap) {
  std::vector<std::vector<double>> axes(chart.dim);
  int g = std::max(per_axis, 3);
  while (chart.dim > 1 && std::pow(static_cast<double>(g), chart.dim) > static_cast<double>(cap)) {
    g = g * 3 / 4;
  }
  for (int j = 0; j < chart.dim; ++j) {
    const auto [lo, hi] = chart.bounds(j);
    if (chart.periodic(j)) {
      const int count = 2 * g;
      for (int i = 0; i < count; ++i) axes[j].push_back(lo + (hi - lo) * i / count);
    } else {
      for (int i = 0; i < g; ++i) {
        const double c = -std::cos(std::numbers::pi * i / (g - 1));
        axes[j].push_back(lo + (hi - lo) * (c + 1.0) / 2.0);
      }
    }
  }
  std::vector<Point> grid;
  Point u(chart.dim);
  auto recurse = [&](auto&& self, int j) -> void {
    if (j == chart.dim) {
      grid.push_back(u);
      return;
    }
    for (double v : axes[j]) {
      u[j] = v;
      self(self, j + 1);
    }
  };
  recurse(recurse, 0);
  return grid;
}

}  // namespace

MaximizeResult maximize_over_domain(const ScalarField& f, DomainKind domain, int dim,
                                    const MaximizeOptions& options) {
  require(dim >= 1, ErrorCode::kInvalidArgument, "maximize_over_domain: dim must be >= 1");
  require(domain != DomainKind::kWholeSpace, ErrorCode::kUnsupported,
          "maximize_over_domain: unbounded domain");
  const Chart chart{domain, dim, options.sign_symmetric && !is_ball_like(domain)};
  MaximizeResult result;
  auto eval = [&](const Point& u) {
    ++result.evaluations;
    const Point x = chart.to_point(u);
    return f(x);
  };

  std::vector<Point> grid = chart_grid(chart, options.grid_per_axis, options.max_grid_points);
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) scored.push_back({eval(grid[i]), i});
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  // Local bracket half-width per chart coordinate: one grid cell.
  const int g = std::max(options.grid_per_axis, 3);
  std::vector<Point> finals;
  std::vector<double> final_values;
  const int count = std::min<int>(options.candidates, static_cast<int>(scored.size()));
  for (int c = 0; c < count; ++c) {
    Point u = grid[scored[c].second];
    double value = scored[c].first;
    std::vector<double> half(dim);
    for (int j = 0; j < dim; ++j) {
      const auto [lo, hi] = chart.bounds(j);
      half[j] = (hi - lo) * (chart.periodic(j) ? 1.0 / g : 2.0 / (g - 1));
    }
    for (int sweep = 0; sweep < 40; ++sweep) {
      double moved = 0.0;
      for (int j = 0; j < dim; ++j) {
        const auto [lo, hi] = chart.bounds(j);
        double a = u[j] - half[j];
        double b = u[j] + half[j];
        if (!chart.periodic(j)) {
          a = std::max(a, lo);
          b = std::min(b, hi);
        }
        Point trial = u;
        auto line = [&](double s) {
          trial[j] = s;
          return eval(trial);
        };
        const double s = golden_section(line, a, b, options.tolerance, result.evaluations);
        // Endpoints are not sampled by golden section; the domain boundary matters.
        double best_s = u[j];
        double best_v = value;
        for (double cand : {s, a, b}) {
          const double v = line(cand);
          if (v > best_v) {
            best_v = v;
            best_s = cand;
          }
        }
        moved = std::max(moved, std::abs(best_s - u[j]));
        u[j] = best_s;
        value = best_v;
      }
      for (double& h : half) h = std::max(2.0 * moved, options.tolerance);
      if (moved <= options.tolerance) break;
    }
    // Snap onto the boundary when it does not lose value.
    for (int j = 0; j < dim; ++j) {
      if (chart.periodic(j)) continue;
      const auto [lo, hi] = chart.bounds(j);
      for (double edge : {lo, hi}) {
        if (std::abs(u[j] - edge) < 1e-7) {
          Point snapped = u;
          snapped[j] = edge;
          const double v = eval(snapped);
          if (v >= value * (1.0 - 1e-14)) {
            u = snapped;
            value = std::max(value, v);
          }
        }
      }
    }
    Point x = chart.to_point(u);
    if (chart.half) {
      for (double& v : x) v = v == 0.0 ? 0.0 : -v;
    }
    finals.push_back(x);
    final_values.push_back(value);
  }

  const double best = *std::max_element(final_values.begin(), final_values.end());
  bool have = false;
  for (std::size_t i = 0; i < finals.size(); ++i) {
    if (final_values[i] < best - options.tie_tolerance * std::abs(best)) continue;
    if (!have || finals[i] < result.location) {
      result.location = finals[i];
      have = true;
    }
  }
  result.value = best;
  return result;
}

MaximizeResult sup_norm(const Polynomial& poly, DomainKind domain) {
  MaximizeOptions options;
  options.grid_per_axis = 8 * poly.degree() + 64;
  options.max_grid_points = 400'000;
  return maximize_over_domain([&](std::span<const double> x) { return std::abs(poly.evaluate(x)); },
                              domain, poly.dim(), options);
}

}  // namespace nikolskii
