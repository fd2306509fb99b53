#include "nikolskii/weights.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "nikolskii/error.hpp"
#include "nikolskii/special.hpp"

namespace nikolskii {

std::string to_string(DomainKind domain) {
  switch (domain) {
    case DomainKind::kInterval: return "interval";
    case DomainKind::kCube: return "cube";
    case DomainKind::kBall: return "ball";
    case DomainKind::kDisk: return "disk";
    case DomainKind::kWholeSpace: return "whole_space";
  }
  return "unknown";
}

double interval_mass(double alpha, double beta) {
  return beta_function((alpha + 1.0) / 2.0, beta + 1.0);
}

WeightSpec WeightSpec::coordinate_product(std::vector<double> alpha, std::vector<double> beta) {
  require(!alpha.empty() && alpha.size() == beta.size(), ErrorCode::kDimensionMismatch,
          "coordinate_product: alpha and beta must have the same positive length");
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    require(alpha[j] >= 0.0, ErrorCode::kNotIntegrable, "coordinate_product: alpha_j must be >= 0");
    require(beta[j] >= -0.5, ErrorCode::kNotIntegrable, "coordinate_product: beta_j must be >= -1/2");
  }
  WeightSpec w;
  w.kind_ = WeightKind::kCoordinateProduct;
  w.dim_ = static_cast<int>(alpha.size());
  w.alpha_ = std::move(alpha);
  w.beta_ = std::move(beta);
  return w;
}

WeightSpec WeightSpec::gegenbauer_cube(const std::vector<double>& lambda) {
  std::vector<double> beta;
  for (double l : lambda) {
    require(l >= 0.0, ErrorCode::kNotIntegrable, "gegenbauer_cube: lambda_j must be >= 0");
    beta.push_back(l - 0.5);
  }
  return coordinate_product(std::vector<double>(lambda.size(), 0.0), std::move(beta));
}

WeightSpec WeightSpec::gegenbauer_interval(double lambda) {
  require(lambda >= 0.0, ErrorCode::kNotIntegrable, "gegenbauer_interval: lambda must be >= 0");
  WeightSpec w;
  w.kind_ = WeightKind::kGegenbauerInterval;
  w.dim_ = 1;
  w.alpha_ = {0.0};
  w.beta_ = {lambda - 0.5};
  w.lambda_ = lambda;
  return w;
}

WeightSpec WeightSpec::ball_radial(int dim, double lambda) {
  require(dim >= 1, ErrorCode::kInvalidArgument, "ball_radial: dim must be >= 1");
  require(lambda >= 0.0, ErrorCode::kNotIntegrable, "ball_radial: lambda must be >= 0");
  WeightSpec w;
  w.kind_ = WeightKind::kBallRadial;
  w.dim_ = dim;
  w.lambda_ = lambda;
  return w;
}

WeightSpec WeightSpec::power_radial(int dim, double gamma) {
  require(dim >= 1 && gamma >= 0.0, ErrorCode::kInvalidArgument,
          "power_radial: need dim >= 1, gamma >= 0");
  WeightSpec w;
  w.kind_ = WeightKind::kPowerRadial;
  w.dim_ = dim;
  w.gamma_ = gamma;
  return w;
}

WeightSpec WeightSpec::coordinate_power(std::vector<double> alpha) {
  require(!alpha.empty(), ErrorCode::kInvalidArgument, "coordinate_power: empty alpha");
  for (double a : alpha) require(a >= 0.0, ErrorCode::kInvalidArgument, "coordinate_power: alpha_j < 0");
  WeightSpec w;
  w.kind_ = WeightKind::kCoordinatePower;
  w.dim_ = static_cast<int>(alpha.size());
  w.alpha_ = std::move(alpha);
  return w;
}

WeightSpec WeightSpec::disk_axial(int ambient_dim, double lambda) {
  require(ambient_dim >= 2, ErrorCode::kInvalidArgument, "disk_axial: ambient dim must be >= 2");
  require(lambda >= 0.0, ErrorCode::kNotIntegrable, "disk_axial: lambda must be >= 0");
  WeightSpec w;
  w.kind_ = WeightKind::kDiskAxial;
  w.dim_ = 2;
  w.lambda_ = lambda;
  w.ambient_dim_ = ambient_dim;
  return w;
}

DomainKind WeightSpec::domain() const {
  switch (kind_) {
    case WeightKind::kCoordinateProduct:
      return dim_ == 1 ? DomainKind::kInterval : DomainKind::kCube;
    case WeightKind::kGegenbauerInterval: return DomainKind::kInterval;
    case WeightKind::kBallRadial: return dim_ == 1 ? DomainKind::kInterval : DomainKind::kBall;
    case WeightKind::kDiskAxial: return DomainKind::kDisk;
    case WeightKind::kPowerRadial:
    case WeightKind::kCoordinatePower: return DomainKind::kWholeSpace;
  }
  return DomainKind::kWholeSpace;
}

bool WeightSpec::bookkeeping_only() const {
  return kind_ == WeightKind::kPowerRadial || kind_ == WeightKind::kCoordinatePower;
}

double WeightSpec::density(std::span<const double> x) const {
  require(static_cast<int>(x.size()) == dim_, ErrorCode::kDimensionMismatch,
          "weight density: point dimension mismatch");
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  switch (kind_) {
    case WeightKind::kCoordinateProduct:
    case WeightKind::kGegenbauerInterval: {
      double value = 1.0;
      for (int j = 0; j < dim_; ++j) {
        value *= std::pow(std::abs(x[j]), alpha_[j]) * std::pow(1.0 - x[j] * x[j], beta_[j]);
      }
      return value;
    }
    case WeightKind::kBallRadial: return std::pow(1.0 - r2, lambda_ - 0.5);
    case WeightKind::kDiskAxial:
      return std::pow(1.0 - r2, lambda_ - 0.5) * std::pow(std::abs(x[1]), ambient_dim_ - 2);
    case WeightKind::kPowerRadial: return std::pow(r2, gamma_ / 2.0);
    case WeightKind::kCoordinatePower: {
      double value = 1.0;
      for (int j = 0; j < dim_; ++j) value *= std::pow(std::abs(x[j]), alpha_[j]);
      return value;
    }
  }
  return 0.0;
}

double WeightSpec::mass() const {
  switch (kind_) {
    case WeightKind::kCoordinateProduct:
    case WeightKind::kGegenbauerInterval: {
      double value = 1.0;
      for (int j = 0; j < dim_; ++j) value *= interval_mass(alpha_[j], beta_[j]);
      return value;
    }
    case WeightKind::kBallRadial: {
      // |S^{m-1}| * (1/2) B(m/2, lambda + 1/2)
      const double m = dim_;
      return std::exp(0.5 * m * std::log(std::numbers::pi) + std::lgamma(lambda_ + 0.5) -
                      std::lgamma(lambda_ + 0.5 + 0.5 * m));
    }
    case WeightKind::kDiskAxial: {
      // radial: (1/2) B(m/2, lambda + 1/2); angular: int_0^{2pi} |sin|^{m-2} = 2 B(1/2, (m-1)/2)
      const double m = ambient_dim_;
      return 0.5 * beta_function(0.5 * m, lambda_ + 0.5) * 2.0 * beta_function(0.5, 0.5 * (m - 1.0));
    }
    case WeightKind::kPowerRadial:
    case WeightKind::kCoordinatePower: return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

bool WeightSpec::in_domain(std::span<const double> x, double tol) const {
  if (static_cast<int>(x.size()) != dim_) return false;
  switch (domain()) {
    case DomainKind::kInterval:
    case DomainKind::kCube:
      for (double v : x) {
        if (std::abs(v) > 1.0 + tol) return false;
      }
      return true;
    case DomainKind::kBall:
    case DomainKind::kDisk: {
      double r2 = 0.0;
      for (double v : x) r2 += v * v;
      return r2 <= 1.0 + tol;
    }
    case DomainKind::kWholeSpace: return true;
  }
  return false;
}

}  // namespace nikolskii
