#pragma once

#include <cstddef>
#include <vector>

#include "nikolskii/extremal.hpp"
#include "nikolskii/geometry.hpp"
#include "nikolskii/polynomial.hpp"

namespace nikolskii {

struct SpaceIdentityReport {
  bool holds = false;
  std::size_t source_count = 0;  // |aV ∩ Z^m_+|
  std::size_t target_count = 0;  // |2aV ∩ (2Z_+)^m|
  std::size_t violations = 0;    // images with an exponent outside the even set
};

/// Maps the monomial basis of P_{aV} through x_j = 1 - 2 t_j^2 and checks
/// that it lands in, and spans, the even space P_{2aV,e}.
SpaceIdentityReport cube_space_identity(const ConvexBody& body, double a);

struct CubeReductionReport {
  double lhs = 0.0;       // N at (1,...,1) for prod (1 - x_j^2)^{lambda_j - 1/2}
  double rhs_even = 0.0;  // scaled N_0 over P_{2aV,e}
  double rhs_full = 0.0;  // scaled N_0 over P_{2aV}
  double residual = 0.0;  // |lhs - rhs_even| / lhs
  double residual_full = 0.0;
  SpaceIdentityReport space;
  bool certified = true;
};

struct ReductionOptions {
  SolverOptions solver;
  /// Norm quadrature degree per space degree for non-even p (0: library policy).
  int rule_degree_per_degree = 0;
  bool include_full_space = true;
};

/// N_{(1..1)}(P_{aV}, prod (1-x_j^2)^{lambda_j-1/2})
///   = 4^{-sum lambda_j / p} N_0(P_{2aV,e}, prod |t_j|^{2 lambda_j} (1-t_j^2)^{lambda_j-1/2}).
CubeReductionReport cube_reduction_check(const ConvexBody& body, double a,
                                         const std::vector<double>& lambda, double p,
                                         const ReductionOptions& options = {});

struct BallReductionReport {
  double lhs = 0.0;     // N_{x0}(P_{n,m}) on B^m, NaN when not computed
  double axial = 0.0;   // C17 N_{(1,0)}(P_{n,2,e}) on the disk
  double rhs = 0.0;     // C19 N_1(P_n) for (1-u^2)^{m/2+lambda-1}
  double residual = 0.0;        // against lhs when computed, else against axial
  double axial_residual = 0.0;  // |axial - rhs| / rhs
  double closed_form_residual = 0.0;  // p = 2 only
  bool full_space = false;
  bool certified = true;
};

struct BallReductionOptions : ReductionOptions {
  /// Solve the m-dimensional problem over all of P_{n,m}. Defaults to on
  /// except for m = 3 with non-even p, where the quadrature is out of reach.
  int full_space = -1;  // -1 auto, 0 off, 1 on
};

/// N_{x0}(P_{n,m}, (1-|x|^2)^{lambda-1/2}) at x0 = (1,0,...,0)
///   = C17 N_{(1,0)}(P_{n,2,e}, disk weight) = C19 N_1(P_n, (1-u^2)^{m/2+lambda-1}).
BallReductionReport ball_reduction_check(int n, int m, double lambda, double p,
                                         const BallReductionOptions& options = {});

/// Exponents (k1, k2) with k1 + k2 <= n and k2 even.
ExponentSet axial_even_set(int n);

/// Average of P over the rotations fixing the x1-axis: reflection x2 -> -x2
/// for m = 2, trapezoid rule in the rotation angle for m = 3
/// (angular_nodes <= 0 picks degree + 1, which is exact).
Polynomial haar_symmetrize_axis(const Polynomial& poly, int angular_nodes = 0);

}  // namespace nikolskii
