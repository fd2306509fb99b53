#include "nikolskii/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nikolskii/error.hpp"

namespace nikolskii {

ExtremalSolver::ExtremalSolver(Eigen::MatrixXd values, Eigen::VectorXd weights, double p)
    : values_(std::move(values)), weights_(std::move(weights)), p_(p) {
  require(p_ >= 1.0 && std::isfinite(p_), ErrorCode::kInvalidArgument,
          "extremal solver: p must be finite and >= 1");
  require(values_.rows() == weights_.size(), ErrorCode::kDimensionMismatch,
          "extremal solver: one weight per row required");
  require(values_.cols() >= 1, ErrorCode::kInvalidArgument, "extremal solver: empty space");
}

double ExtremalSolver::norm(const Eigen::VectorXd& coefficients) const {
  const Eigen::VectorXd r = values_ * coefficients;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < r.size(); ++i) sum += weights_(i) * std::pow(std::abs(r(i)), p_);
  return std::pow(sum, 1.0 / p_);
}

namespace {

struct Smoothed {
  double value;
  Eigen::VectorXd d1;  // derivative of each term w.r.t. r_i (times w_i)
  Eigen::VectorXd d2;
};

Smoothed smoothed_terms(const Eigen::VectorXd& r, const Eigen::VectorXd& w, double p, double eps,
                        bool derivatives) {
  Smoothed s{0.0, {}, {}};
  if (derivatives) {
    s.d1.resize(r.size());
    s.d2.resize(r.size());
  }
  const double e2 = eps * eps;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    const double q = r(i) * r(i) + e2;
    if (p == 2.0) {
      s.value += w(i) * q;
      if (derivatives) {
        s.d1(i) = 2.0 * w(i) * r(i);
        s.d2(i) = 2.0 * w(i);
      }
      continue;
    }
    if (q == 0.0) {
      if (derivatives) {
        s.d1(i) = 0.0;
        s.d2(i) = 0.0;
      }
      continue;
    }
    const double qp = std::pow(q, 0.5 * p);
    s.value += w(i) * qp;
    if (derivatives) {
      s.d1(i) = w(i) * p * r(i) * qp / q;
      s.d2(i) = w(i) * p * qp / (q * q) * ((p - 1.0) * r(i) * r(i) + e2);
    }
  }
  return s;
}

}  // namespace

ExtremalSolver::Run ExtremalSolver::minimize(const Eigen::VectorXd& start,
                                             const Eigen::MatrixXd& null_basis,
                                             const SolverOptions& options) const {
  Run run{start, 0.0, 0.0, 0, false};
  const Eigen::MatrixXd az = values_ * null_basis;
  const double total_weight = weights_.sum();

  auto rms = [&](const Eigen::VectorXd& c) {
    const Eigen::VectorXd r = values_ * c;
    return std::sqrt(weights_.dot(r.cwiseProduct(r)) / total_weight);
  };

  std::vector<double> schedule;
  if (p_ >= 2.0) {
    schedule.push_back(0.0);
  } else {
    const double scale = rms(start);
    for (double rel = 1e-1; rel > options.smoothing_floor * 1.5; rel *= 0.1) schedule.push_back(rel * scale);
    schedule.push_back(options.smoothing_floor * scale);
  }

  Eigen::VectorXd c = start;
  for (std::size_t stage = 0; stage < schedule.size(); ++stage) {
    const double eps = schedule[stage];
    const bool last = stage + 1 == schedule.size();
    bool stage_converged = false;
    for (int it = 0; it < options.max_iterations; ++it) {
      ++run.iterations;
      const Eigen::VectorXd r = values_ * c;
      const Smoothed s = smoothed_terms(r, weights_, p_, eps, true);
      const Eigen::VectorXd grad = az.transpose() * s.d1;
      const Eigen::MatrixXd scaled = s.d2.cwiseSqrt().asDiagonal() * az;
      Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(az.cols(), az.cols());
      hess.selfadjointView<Eigen::Lower>().rankUpdate(scaled.transpose());
      if (grad.size() == 0) {
        stage_converged = true;
        break;
      }
      // Tiny ridge keeps the factorization defined when the smoothing vanishes.
      const double ridge = 1e-14 * std::max(hess.diagonal().maxCoeff(), 1e-300);
      hess.diagonal().array() += ridge;
      const Eigen::LDLT<Eigen::MatrixXd, Eigen::Lower> ldlt(hess);  // reads the lower triangle only
      Eigen::VectorXd step = -ldlt.solve(grad);
      if (!step.allFinite()) step = -grad;
      const double decrement = -grad.dot(step);
      const double stage_tol = last ? options.tolerance : 1e-6;
      if (decrement <= stage_tol * s.value) {
        stage_converged = true;
        break;
      }
      const Eigen::VectorXd dir = null_basis * step;
      double t = 1.0;
      bool accepted = false;
      for (int back = 0; back < 60; ++back) {
        const Eigen::VectorXd trial = c + t * dir;
        const double f = smoothed_terms(values_ * trial, weights_, p_, eps, false).value;
        if (f <= s.value - 0.25 * t * decrement) {
          c = trial;
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) {
        stage_converged = true;  // no further descent available in double precision
        break;
      }
    }
    if (last) run.converged = stage_converged;
  }

  const Eigen::VectorXd r = values_ * c;
  const double final_eps = schedule.back();
  const Smoothed s = smoothed_terms(r, weights_, p_, final_eps, true);
  const Eigen::VectorXd full_grad = values_.transpose() * s.d1;
  const double gnorm = full_grad.norm();
  run.residual = gnorm > 0.0 ? (null_basis.transpose() * full_grad).norm() / gnorm : 0.0;
  run.c = c;
  run.objective = 0.0;
  for (Eigen::Index i = 0; i < r.size(); ++i) run.objective += weights_(i) * std::pow(std::abs(r(i)), p_);
  return run;
}

ExtremalSolution ExtremalSolver::solve(const Eigen::VectorXd& functional,
                                       const SolverOptions& options) const {
  require(functional.size() == values_.cols(), ErrorCode::kDimensionMismatch,
          "extremal solver: functional length must match the space dimension");
  const double lnorm2 = functional.squaredNorm();
  require(lnorm2 > 0.0, ErrorCode::kInvalidArgument, "extremal solver: functional is zero");
  const Eigen::Index n = functional.size();

  // Orthonormal basis of ker(l) from a Householder QR of l.
  Eigen::MatrixXd null_basis(n, n - 1);
  if (n > 1) {
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(functional);
    const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    null_basis = q.rightCols(n - 1);
  }
  const Eigen::VectorXd particular = functional / lnorm2;

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int restarts = std::max(1, options.restarts);

  ExtremalSolution out;
  double best = std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (int k = 0; k < restarts; ++k) {
    Eigen::VectorXd start = particular;
    if (k > 0 && n > 1) {
      Eigen::VectorXd y(n - 1);
      for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = normal(rng);
      start += null_basis * y * (std::sqrt(1.0 / lnorm2) / std::sqrt(static_cast<double>(n)));
    }
    const Run run = minimize(start, null_basis, options);
    out.iterations += run.iterations;
    worst = std::max(worst, run.objective);
    if (run.objective < best) {
      best = run.objective;
      out.coefficients = run.c;
      out.first_order_residual = run.residual;
      out.converged = run.converged;
    }
  }
  out.restarts = restarts;
  const double min_norm = std::pow(best, 1.0 / p_);
  out.value = 1.0 / min_norm;
  out.coefficients /= min_norm;
  out.spread = restarts > 1 ? (std::pow(worst, 1.0 / p_) - min_norm) / min_norm : 0.0;
  return out;
}

}  // namespace nikolskii
