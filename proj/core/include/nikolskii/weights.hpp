#pragma once

#include <span>
#include <string>
#include <vector>

namespace nikolskii {

enum class DomainKind { kInterval, kCube, kBall, kDisk, kWholeSpace };

std::string to_string(DomainKind domain);

enum class WeightKind {
  kCoordinateProduct,   // prod_j |t_j|^alpha_j (1 - t_j^2)^beta_j on Q^m
  kGegenbauerInterval,  // (1 - u^2)^{lambda - 1/2} on [-1,1]
  kBallRadial,          // (1 - |x|^2)^{lambda - 1/2} on B^m
  kPowerRadial,         // |t|^gamma on R^m (closed-form constants only)
  kCoordinatePower,     // prod_j |t_j|^alpha_j on R^m (closed-form constants only)
  kDiskAxial,           // (1 - u^2 - v^2)^{lambda - 1/2} |v|^{m-2} on B^2
};

/// Weight W on a domain. Immutable value type.
class WeightSpec {
 public:
  static WeightSpec coordinate_product(std::vector<double> alpha, std::vector<double> beta);
  /// prod_j (1 - x_j^2)^{lambda_j - 1/2}: the product Gegenbauer weight on the cube.
  static WeightSpec gegenbauer_cube(const std::vector<double>& lambda);
  static WeightSpec gegenbauer_interval(double lambda);
  static WeightSpec ball_radial(int dim, double lambda);
  static WeightSpec power_radial(int dim, double gamma);
  static WeightSpec coordinate_power(std::vector<double> alpha);
  /// Weight on the disk B^2 that the rotation-invariant reduction of an
  /// m-dimensional ball problem produces; `ambient_dim` is that m (>= 2).
  static WeightSpec disk_axial(int ambient_dim, double lambda);

  WeightKind kind() const { return kind_; }
  DomainKind domain() const;
  int dim() const { return dim_; }
  /// Per-axis |t|^alpha exponents (coordinate kinds; gegenbauer interval has alpha = 0).
  const std::vector<double>& alpha() const { return alpha_; }
  /// Per-axis (1 - t^2)^beta exponents.
  const std::vector<double>& beta() const { return beta_; }
  double lambda() const { return lambda_; }
  double gamma() const { return gamma_; }
  int ambient_dim() const { return ambient_dim_; }

  /// Bookkeeping kinds live on R^m and carry no quadrature.
  bool bookkeeping_only() const;
  double density(std::span<const double> x) const;
  /// Closed-form total mass (Beta functions); infinite for bookkeeping kinds.
  double mass() const;
  /// True when x lies in the closed domain.
  bool in_domain(std::span<const double> x, double tol = 1e-12) const;

  bool operator==(const WeightSpec&) const = default;

 private:
  WeightSpec() = default;

  WeightKind kind_ = WeightKind::kCoordinateProduct;
  int dim_ = 1;
  std::vector<double> alpha_;
  std::vector<double> beta_;
  double lambda_ = 0.0;
  double gamma_ = 0.0;
  int ambient_dim_ = 0;
};

/// Mass of |u|^alpha (1 - u^2)^beta on [-1,1]: B((alpha + 1)/2, beta + 1).
double interval_mass(double alpha, double beta);

}  // namespace nikolskii
