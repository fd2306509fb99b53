#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nikolskii/extremal.hpp"
#include "nikolskii/geometry.hpp"

namespace nikolskii {

enum class ScanKind { kCube, kPoint, kBall };

std::string to_string(ScanKind kind);

struct ScanOptions {
  SolverOptions solver{};
  /// Norm rule degree for p != 2 is at least this multiple of the space degree.
  int rule_degree_per_degree = 0;
  /// Parameter grid; empty means {2, 4, ..., n_max}.
  std::vector<int> grid;
};

/// Scaled sharp constants s_n = n^{-kappa} N_n and their extrapolated limit.
struct ScanResult {
  ScanKind kind = ScanKind::kCube;
  double p = 2.0;
  double kappa = 0.0;
  std::vector<int> grid;
  std::vector<double> raw;
  std::vector<double> scaled;  // NaN at n = 0
  std::vector<bool> certified;
  /// Order-1 Richardson limit from the last two grid points.
  double extrapolated = 0.0;
  std::optional<double> predicted;
  /// |extrapolated - predicted| / predicted, or NaN without a prediction.
  double gap = 0.0;
  /// Spread (max - min) of the first and last three scaled values.
  double head_spread = 0.0;
  double tail_spread = 0.0;
  /// Extrapolation inside the tail bracket widened by the largest order-1
  /// correction the tail allows.
  bool within_bracket = true;
  /// |s_n - predicted| <= C / n with C fitted on the first two points.
  std::optional<bool> envelope_ok;
  bool low_confidence = false;
};

/// Theorem of the cube: a^{-(m + 2 sum lambda)/p} N(P_{aV}) for the weight
/// prod (1 - x_j^2)^{lambda_j - 1/2}, evaluated at the vertex (1, ..., 1).
ScanResult cube_limit_scan(const ConvexBody& body, const std::vector<double>& lambda, double p,
                           int n_max, const ScanOptions& options = {});

/// a^{-(m + sum alpha)/p} N_0(P_{aV}) for prod |x_j|^{alpha_j} (1 - x_j^2)^{beta_j}.
ScanResult point_limit_scan(const ConvexBody& body, const std::vector<double>& alpha,
                            const std::vector<double>& beta, double p, int n_max,
                            const ScanOptions& options = {});

/// n^{-(m + 2 lambda)/p} N(P_{n,m}) on the ball, through the univariate reduction.
ScanResult ball_limit_scan(double lambda, double p, int m, int n_max,
                           const ScanOptions& options = {});

struct ChainReport {
  double predicted = 0.0;          // A_2 N_0 of the entire-function side
  double analytic_limit = 0.0;     // limit of the scaled closed form
  double analytic_residual = 0.0;  // relative
  int numeric_n = 1'000'000;
  double numeric_value = 0.0;
  double numeric_residual = 0.0;  // relative
  /// max over 10 <= n <= 10^4 of |s_n - predicted| n / (3 (2 lambda + m)).
  double envelope_ratio = 0.0;
};

/// Ties the p = 2 ball closed form to the entire-function constant.
ChainReport chain_check(int m, double lambda);

struct SubstitutionReport {
  double max_violation = 0.0;  // > 0 means an inequality failed by that much
  double c13 = 0.0;
  long samples = 0;
};

/// Random test of
///   0 <= prod |v_j|^a_j - prod |sin v_j|^a_j (tau^2 cos^2 v_j + 1 - tau^2)^b_j cos v_j
///     <= C13 prod |v_j|^a_j sum v_j^2,  v in [-pi/2, pi/2]^m.
SubstitutionReport substitution_gap_check(double tau, const std::vector<double>& alpha,
                                          const std::vector<double>& beta, long trials,
                                          std::uint64_t seed = 1);

}  // namespace nikolskii
