#pragma once

#include <optional>
#include <span>
#include <string>

#include "nikolskii/extremal.hpp"
#include "nikolskii/orthonormal.hpp"
#include "nikolskii/polynomial.hpp"
#include "nikolskii/quadrature.hpp"
#include "nikolskii/weights.hpp"

namespace nikolskii {

struct Diagnostics {
  std::string method;  // "kernel" or "newton"
  int restarts = 0;
  int iterations = 0;
  double first_order_residual = 0.0;
  double restart_spread = 0.0;
  int quadrature_degree = 0;
  int point_evaluations = 1;  // > 1 in sup mode
  double gram_residual = 0.0;
  bool converged = true;
  /// False when restarts disagree by more than 1e-6 or Newton stalled.
  bool certified = true;
};

struct SharpConstResult {
  double value = 0.0;
  Polynomial extremizer;  // ||.||_{p,W} = 1 and extremizer(maximizer) = value
  Point maximizer;
  Diagnostics diagnostics;
};

/// Sharp point and sup constants of one polynomial space in L_{p,W}.
/// Builds the orthonormal system and the norm quadrature once; every query
/// reuses them.
class SharpConstantProblem {
 public:
  SharpConstantProblem(ExponentSet exponents, WeightSpec weight, double p,
                       SolverOptions options = {});

  const ExponentSet& exponents() const { return exponents_; }
  const WeightSpec& weight() const { return weight_; }
  double p() const { return p_; }
  const OrthonormalSystem& system() const { return system_; }
  const QuadratureRule& norm_rule() const { return norm_rule_; }
  int rule_degree() const { return rule_degree_; }

  /// N_{x0}.
  SharpConstResult at_point(std::span<const double> x0) const;
  /// N = sup over the domain of N_{x0}.
  SharpConstResult sup() const;
  /// N_{x0} value only, with `restarts` starts.
  double point_value(std::span<const double> x0, int restarts = 1) const;

  /// ||P||_{p,W} under the problem's norm rule.
  double norm(const Polynomial& poly) const;

 private:
  bool rotation_invariant() const;

  ExponentSet exponents_;
  WeightSpec weight_;
  double p_;
  SolverOptions options_;
  OrthonormalSystem system_;
  int rule_degree_ = 0;
  QuadratureRule norm_rule_;
  std::optional<ExtremalSolver> solver_;
};

/// N_{x0} at p = 2: sqrt of the reproducing-kernel diagonal.
SharpConstResult sharp_constant_p2_at_point(const ExponentSet& exponents, const WeightSpec& weight,
                                            std::span<const double> x0);

/// N_{x0} (x0 given) or N (x0 empty) for p in [1, inf).
SharpConstResult sharp_constant_general_p(const ExponentSet& exponents, const WeightSpec& weight,
                                          const std::optional<Point>& x0, double p,
                                          const SolverOptions& options = {});

/// Sharp constant of P_n at u = 1 for (1-u^2)^{lambda-1/2} on [-1,1], p = 2.
double exact_interval_p2(int n, double lambda);
/// Sharp constant of P_{n,m} for (1-|x|^2)^{lambda-1/2} on B^m, p = 2.
double exact_ball_p2(int n, int m, double lambda);
/// N_0 of entire functions of spherical type 1 in L_{2,|t|^{2 lambda}}(R^m).
double exact_entire_p2(int m, double lambda);

struct ReductionConstants {
  double a1 = 0.0;
  double a2 = 0.0;
  double c17 = 0.0;  // NaN for m = 1, where the disk reduction does not exist
  double c18 = 0.0;
  double c19 = 0.0;
};

/// The five constants of the ball limit theorem and its reductions.
/// Checks a1 = 2^{1/p} c19 and a2 = a1 / c18 before returning.
ReductionConstants reduction_constants(int m, double p, double lambda);

/// lim_n n^{-(m + 2 lambda)/2} exact_ball_p2(n, m, lambda), from the Gamma asymptotics.
double ball_limit_p2(int m, double lambda);

}  // namespace nikolskii
