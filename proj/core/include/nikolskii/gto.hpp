#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nikolskii/norms.hpp"
#include "nikolskii/polynomial.hpp"
#include "nikolskii/quadrature.hpp"
#include "nikolskii/weights.hpp"

namespace nikolskii {

enum class GtoKind { kInterval, kCube, kBallChebyshev, kBallGegenbauer };

std::string to_string(GtoKind kind);

inline constexpr int kDefaultInnerDegree = 32;

/// A generalized translation operator together with the probability measure
/// it averages against. Inner rules integrate polynomials of degree
/// <= inner_degree exactly; the lambda = 0 interval measure is the exact pair
/// of atoms at +-1.
class GtoSpec {
 public:
  static GtoSpec interval(double lambda, int inner_degree = kDefaultInnerDegree);
  static GtoSpec cube(std::vector<double> lambda, int inner_degree = kDefaultInnerDegree);
  static GtoSpec ball_chebyshev(int m, int inner_degree = kDefaultInnerDegree);
  static GtoSpec ball_gegenbauer(int m, double lambda, int inner_degree = kDefaultInnerDegree);

  GtoKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const std::vector<double>& lambda() const { return lambda_; }
  int inner_degree() const { return inner_degree_; }
  /// Inner rule for axis j (interval/cube) or the single ball/sphere rule.
  const QuadratureRule& inner_rule(int axis = 0) const;
  /// Weight whose L_p norms the operator contracts.
  WeightSpec weight() const;
  DomainKind domain() const;
  /// Same operator with inner rules exact to `degree`.
  GtoSpec with_inner_degree(int degree) const;

 private:
  GtoSpec() = default;

  GtoKind kind_ = GtoKind::kInterval;
  int dim_ = 1;
  std::vector<double> lambda_;
  int inner_degree_ = kDefaultInnerDegree;
  std::vector<QuadratureRule> rules_;
};

/// T_t f(x) = int f(t x + s sqrt(1-t^2) sqrt(1-x^2)) dmu(s).
double apply_interval(const GtoSpec& spec, const ScalarField& f, double t, double x);
/// Tensor composition of the interval operators, one per coordinate.
double apply_cube(const GtoSpec& spec, const ScalarField& f, std::span<const double> t,
                  std::span<const double> x);
/// T_t f(x) = int f(t x + sqrt(1-t^2) s D(x) H(x)) dmu(s) over S^{m-1} or B^m.
/// `frame`, when given, replaces the Householder H(x); its first row must be x/|x|.
double apply_ball(const GtoSpec& spec, const ScalarField& f, double t, std::span<const double> x,
                  const Eigen::MatrixXd* frame = nullptr);

/// Symmetric orthogonal matrix whose first row is x/|x| (identity at x = 0).
Eigen::MatrixXd householder_frame(std::span<const double> x);

/// Dispatch on the spec kind; `t` has dim entries for cubes and one otherwise.
double apply_gto(const GtoSpec& spec, const ScalarField& f, std::span<const double> t,
                 std::span<const double> x);

struct GtoMatrix {
  Eigen::MatrixXd matrix;  // column k: monomial coefficients of T_t x^{e_k}
  double residual = 0.0;   // max relative least-squares misfit over all columns
};

/// Matrix of T_t on span(exponents) in the monomial basis, by least squares
/// on a grid larger than the space.
GtoMatrix gto_matrix(const GtoSpec& spec, const ExponentSet& exponents, std::span<const double> t);

struct ContractionReport {
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  int trials = 0;
  Point worst_t;
};

/// Max over random (P, t) of ||T_t P||_{p,W} / ||P||_{p,W}, W = spec.weight().
/// T_t P is evaluated directly at the norm-rule nodes. A rule degree of 0
/// selects norm_rule_degree.
ContractionReport contraction_check(const GtoSpec& spec, const ExponentSet& exponents, double p,
                                    int trials, std::uint64_t seed = 1, int rule_degree = 0);

/// Largest scaled residual of the product formulas on a grid x grid set of
/// (t, x) pairs over all degrees <= max_degree.
double eigen_residual_interval(double lambda, int max_degree, int grid = 20);
double eigen_residual_cube(const std::vector<double>& lambda, int max_degree, int grid = 20);
/// Phi_{l,N} with l + 2N <= max_degree for every catalogue harmonic.
double eigen_residual_ball_chebyshev(int m, int max_degree, int grid = 20);
/// C_n^{lambda+(m-1)/2}((., y)) for `directions` random unit y.
double eigen_residual_ball_gegenbauer(int m, double lambda, int max_degree, int grid = 20,
                                      int directions = 3, std::uint64_t seed = 1);

/// Parameters moving an interior value P(y0) to a vertex x0:
/// T_t P(x0) = P(y0). Interval and cube operators only.
struct BoundaryTransfer {
  Point t;
  Point x0;
};
BoundaryTransfer transfer_to_boundary(const GtoSpec& spec, std::span<const double> y0);

}  // namespace nikolskii
