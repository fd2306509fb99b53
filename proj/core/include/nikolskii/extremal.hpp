#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace nikolskii {

struct SolverOptions {
  int restarts = 16;  // first start is the p = 2 kernel section, the rest random
  int max_iterations = 400;
  double tolerance = 1e-13;  // on the squared Newton decrement, relative to the objective
  std::uint64_t seed = 1;
  int rule_degree = 0;  // norm quadrature degree; 0 selects norm_rule_degree
  double smoothing_floor = 1e-8;  // final eps relative to the residual scale, p < 2
};

struct ExtremalSolution {
  double value = 0.0;          // max l(c) / ||c||_p
  Eigen::VectorXd coefficients;  // normalized extremizer, ||.||_p = 1 and l(c) = value
  double first_order_residual = 0.0;
  double spread = 0.0;  // relative spread of the restart values
  int iterations = 0;
  int restarts = 0;
  bool converged = false;
};

/// Discrete extremal problem  max l(c) / (sum_i w_i |(A c)_i|^p)^{1/p}, p >= 1.
///
/// Solved through its convex dual: minimize sum_i w_i |(A c)_i|^p subject to
/// l(c) = 1, by damped Newton in the null space of l. For p < 2 the objective
/// is smoothed as (r^2 + eps^2)^{p/2} with eps driven down to
/// `smoothing_floor` times the residual scale by continuation.
/// The columns of A should be (nearly) orthonormal under w, which makes the
/// kernel section l / |l|^2 the p = 2 solution and a good warm start.
class ExtremalSolver {
 public:
  ExtremalSolver(Eigen::MatrixXd values, Eigen::VectorXd weights, double p);

  ExtremalSolution solve(const Eigen::VectorXd& functional, const SolverOptions& options = {}) const;

  double p() const { return p_; }
  /// (sum_i w_i |(A c)_i|^p)^{1/p}.
  double norm(const Eigen::VectorXd& coefficients) const;

 private:
  struct Run {
    Eigen::VectorXd c;
    double objective;
    double residual;
    int iterations;
    bool converged;
  };
  Run minimize(const Eigen::VectorXd& start, const Eigen::MatrixXd& null_basis,
               const SolverOptions& options) const;

  Eigen::MatrixXd values_;
  Eigen::VectorXd weights_;
  double p_;
};

}  // namespace nikolskii
