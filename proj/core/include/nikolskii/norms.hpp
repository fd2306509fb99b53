#pragma once

#include <functional>
#include <limits>
#include <span>

#include "nikolskii/geometry.hpp"
#include "nikolskii/polynomial.hpp"
#include "nikolskii/quadrature.hpp"

namespace nikolskii {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// (sum_i w_i |f_i|^p)^{1/p} from values at the rule nodes; p = inf gives max |f_i|.
double weighted_norm(std::span<const double> values, const QuadratureRule& rule, double p);
double weighted_norm(const Polynomial& poly, const QuadratureRule& rule, double p);
/// Builds the rule from the weight with norm_rule_degree; p = inf uses sup_norm.
double weighted_norm(const Polynomial& poly, const WeightSpec& weight, double p);

using ScalarField = std::function<double(std::span<const double>)>;

struct MaximizeOptions {
  int grid_per_axis = 33;
  int candidates = 4;         // grid maxima refined locally
  double tolerance = 1e-10;   // final bracket width
  double tie_tolerance = 1e-9;
  std::size_t max_grid_points = 2'000'000;
  /// Cube only: f is invariant under coordinate sign flips, so search
  /// [0,1]^dim and report the all-negative image of the maximizer.
  bool sign_symmetric = false;
};

struct MaximizeResult {
  double value = 0.0;
  Point location;
  int evaluations = 0;
};

/// Maximizes f over the closed domain (interval/cube: [-1,1]^dim; ball/disk:
/// unit ball). Chebyshev–Lobatto grid on the cube, polar grid on the ball,
/// then coordinatewise golden-section refinement of the best candidates. Among
/// maximizers within tie_tolerance (relative) the lexicographically smallest
/// location is reported.
MaximizeResult maximize_over_domain(const ScalarField& f, DomainKind domain, int dim,
                                    const MaximizeOptions& options = {});

/// max |P| over the domain, with a grid of 8 deg + 64 points per axis.
MaximizeResult sup_norm(const Polynomial& poly, DomainKind domain);

}  // namespace nikolskii
