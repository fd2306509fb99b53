#include "nikolskii/special.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "nikolskii/error.hpp"

namespace nikolskii {

double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

double beta_function(double a, double b) { return std::exp(log_beta(a, b)); }

namespace {

// Monic three-term recurrence of the Jacobi weight (1-x)^a (1+x)^b:
// p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}.
struct JacobiRecurrence {
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[0] holds the total mass
};

JacobiRecurrence jacobi_recurrence(int n, double a, double b) {
  JacobiRecurrence rec;
  rec.alpha.resize(n + 1);
  rec.beta.resize(n + 1);
  const double ab = a + b;
  rec.alpha[0] = (b - a) / (ab + 2.0);
  rec.beta[0] = std::exp((ab + 1.0) * std::numbers::ln2 + log_beta(a + 1.0, b + 1.0));
  for (int k = 1; k <= n; ++k) {
    const double s = 2.0 * k + ab;
    rec.alpha[k] = (b * b - a * a) / (s * (s + 2.0));
    if (k == 1) {
      rec.beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      rec.beta[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
  }
  return rec;
}

// Orthonormal p_0..p_n at x; returns p_n, its derivative, and sum_{k<n} p_k^2.
struct OrthoEval {
  double pn;
  double dpn;
  double christoffel_sum;
};

OrthoEval eval_orthonormal(const JacobiRecurrence& rec, int n, double x) {
  double p_prev = 0.0;
  double p = 1.0 / std::sqrt(rec.beta[0]);
  double dp_prev = 0.0;
  double dp = 0.0;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    sum += p * p;
    const double b_next = std::sqrt(rec.beta[k + 1]);
    const double b_cur = k == 0 ? 0.0 : std::sqrt(rec.beta[k]);
    const double p_next = ((x - rec.alpha[k]) * p - b_cur * p_prev) / b_next;
    const double dp_next = (p + (x - rec.alpha[k]) * dp - b_cur * dp_prev) / b_next;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp, sum};
}

}  // namespace

GaussRule1D gauss_jacobi(int n, double a, double b) {
  require(n >= 1, ErrorCode::kInvalidArgument, "gauss_jacobi: n must be >= 1");
  require(a > -1.0 && b > -1.0, ErrorCode::kNotIntegrable,
          "gauss_jacobi: exponents must exceed -1");
  const JacobiRecurrence rec = jacobi_recurrence(n, a, b);

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) diag[k] = rec.alpha[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(rec.beta[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::EigenvaluesOnly);

  GaussRule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const OrthoEval e = eval_orthonormal(rec, n, x);
      if (e.dpn == 0.0) break;
      const double step = e.pn / e.dpn;
      const double next = std::clamp(x - step, -1.0, 1.0);
      if (next == x) break;
      x = next;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / eval_orthonormal(rec, n, x).christoffel_sum;
  }
  return rule;
}

GaussRule1D gauss_jacobi_unit(int n, double c, double d) {
  // s = (1 + x) / 2, weight s^c (1-s)^d = 2^{-c-d} (1-x)^d (1+x)^c, ds = dx / 2.
  GaussRule1D rule = gauss_jacobi(n, d, c);
  const double scale = std::exp(-(c + d + 1.0) * std::numbers::ln2);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + rule.nodes[i]);
    rule.weights[i] *= scale;
  }
  return rule;
}

double chebyshev_t(int n, double x) {
  if (n == 0) return 1.0;
  double t_prev = 1.0;
  double t = x;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * t - t_prev;
    t_prev = t;
    t = next;
  }
  return t;
}

double gegenbauer(int n, double lambda, double x) {
  if (lambda == 0.0) return chebyshev_t(n, x);
  if (n == 0) return 1.0;
  double c_prev = 1.0;
  double c = 2.0 * lambda * x;
  for (int k = 2; k <= n; ++k) {
    const double next = (2.0 * x * (k + lambda - 1.0) * c - (k + 2.0 * lambda - 2.0) * c_prev) / k;
    c_prev = c;
    c = next;
  }
  return c;
}

double gegenbauer_at_one(int n, double lambda) {
  if (lambda == 0.0) return 1.0;
  return std::exp(std::lgamma(n + 2.0 * lambda) - std::lgamma(n + 1.0) - std::lgamma(2.0 * lambda));
}

}  // namespace nikolskii
