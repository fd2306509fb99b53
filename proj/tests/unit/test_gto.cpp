#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nikolskii/error.hpp"
#include "nikolskii/gto.hpp"
#include "nikolskii/special.hpp"

using namespace nikolskii;

namespace {

ScalarField field(const Polynomial& p) {
  return [p](std::span<const double> x) { return p.evaluate(x); };
}

Polynomial random_polynomial(const ExponentSet& set, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> c(set.size());
  for (double& v : c) v = g(rng);
  return Polynomial(set, c, Basis::kChebyshev);
}

}  // namespace

TEST(GtoSpec, MeasuresAreProbability) {
  EXPECT_NEAR(GtoSpec::interval(0.7).inner_rule().mass(), 1.0, 1e-12);
  EXPECT_NEAR(GtoSpec::cube({0.5, 2.0}).inner_rule(1).mass(), 1.0, 1e-12);
  EXPECT_NEAR(GtoSpec::ball_chebyshev(3).inner_rule().mass(), 1.0, 1e-12);
  EXPECT_NEAR(GtoSpec::ball_gegenbauer(2, 0.25).inner_rule().mass(), 1.0, 1e-12);
  const QuadratureRule atoms = GtoSpec::interval(0.0).inner_rule();
  ASSERT_EQ(atoms.size(), 2u);
  EXPECT_DOUBLE_EQ(std::abs(atoms.nodes[0]), 1.0);
  EXPECT_DOUBLE_EQ(atoms.weights[0], 0.5);
  EXPECT_DOUBLE_EQ(atoms.weights[1], 0.5);
}

TEST(GtoSpec, GegenbauerBallNeedsPositiveLambda) { EXPECT_THROW(GtoSpec::ball_gegenbauer(2, 0.0), Error); }

TEST(ApplyInterval, Examples) {
  const Polynomial t1 = gegenbauer_polynomial(1, 0.0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    const double t = u(rng), x = u(rng);
    EXPECT_NEAR(apply_interval(GtoSpec::interval(0.0), field(t1), t, x), t * x, 1e-15);
    EXPECT_NEAR(apply_interval(GtoSpec::interval(1.5), [](auto y) { return std::exp(y[0]); }, 1.0, x), std::exp(x),
                1e-15);
  }
  const Polynomial c2 = gegenbauer_polynomial(2, 0.5);
  EXPECT_NEAR(apply_interval(GtoSpec::interval(0.5), field(c2), 0.0, 0.0), 0.25 / 1.0, 1e-14);
}

TEST(ApplyCube, Examples) {
  const GtoSpec spec = GtoSpec::cube({0.0, 0.0});
  const Polynomial y1y2 = Polynomial::from_terms(2, {{{1, 1}, 1.0}});
  const Point t{0.3, -0.6}, x{0.8, 0.1};
  EXPECT_NEAR(apply_cube(spec, field(y1y2), t, x), 0.3 * -0.6 * 0.8 * 0.1, 1e-15);
  const GtoSpec mixed = GtoSpec::cube({0.5, 1.5});
  auto f = [](auto y) { return std::sin(y[0]) * std::cos(2 * y[1]); };
  EXPECT_NEAR(apply_cube(mixed, f, Point{1.0, 1.0}, x), f(x), 1e-15);
  EXPECT_THROW(apply_cube(mixed, f, Point{1.0}, x), Error);
}

TEST(ApplyBall, Examples) {
  const GtoSpec cheb = GtoSpec::ball_chebyshev(2);
  const Polynomial x1 = Polynomial::coordinate(2, 0);
  const Point x{0.4, -0.3};
  for (double t : {-0.8, 0.0, 0.5}) EXPECT_NEAR(apply_ball(cheb, field(x1), t, x), t * 0.4, 1e-14);
  auto f = [](auto y) { return std::exp(y[0] - y[1]); };
  EXPECT_NEAR(apply_ball(GtoSpec::ball_gegenbauer(3, 0.5), f, 1.0, Point{0.1, 0.2, 0.3}), f(Point{0.1, 0.2, 0.3}),
              1e-15);
}

TEST(Eigenrelations, AllKinds) {
  for (double lambda : {0.0, 0.5, 1.0, 2.5}) EXPECT_LE(eigen_residual_interval(lambda, 8), 1e-10) << lambda;
  EXPECT_LE(eigen_residual_cube({0.0, 0.5}, 6), 1e-10);
  EXPECT_LE(eigen_residual_cube({1.0, 0.5, 0.0}, 4, 8), 1e-10);
  for (int m : {2, 3}) {
    EXPECT_LE(eigen_residual_ball_chebyshev(m, 6), 1e-10) << m;
    EXPECT_LE(eigen_residual_ball_gegenbauer(m, 0.5, 6), 1e-10) << m;
    EXPECT_LE(eigen_residual_ball_gegenbauer(m, 1.75, 5, 12), 1e-10) << m;
  }
}

TEST(GtoMatrix, IdentityAtTOne) {
  const GtoMatrix a = gto_matrix(GtoSpec::interval(0.5), ExponentSet::total_degree(1, 5), Point{1.0});
  EXPECT_LE((a.matrix - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-12);
  const GtoMatrix b = gto_matrix(GtoSpec::ball_chebyshev(2), ExponentSet::total_degree(2, 4), Point{1.0});
  EXPECT_LE((b.matrix - Eigen::MatrixXd::Identity(15, 15)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(GtoMatrix, ChebyshevIntervalColumns) {
  // lambda = 0: T_t u^k(x) = ((tx + r)^k + (tx - r)^k) / 2 with r = sqrt(1-t^2) sqrt(1-x^2).
  const double t = 0.6;
  const GtoMatrix a = gto_matrix(GtoSpec::interval(0.0), ExponentSet::total_degree(1, 2), Point{t});
  EXPECT_LE(a.residual, 1e-8);
  // u^2 -> t^2 x^2 + (1 - t^2)(1 - x^2)
  EXPECT_NEAR(a.matrix(0, 2), 1 - t * t, 1e-13);
  EXPECT_NEAR(a.matrix(1, 2), 0.0, 1e-13);
  EXPECT_NEAR(a.matrix(2, 2), t * t - (1 - t * t), 1e-13);
  EXPECT_NEAR(a.matrix(1, 1), t, 1e-13);
}

TEST(GtoMatrix, CubeIsKroneckerProduct) {
  const std::vector<double> lambda{0.5, 1.0};
  const Point t{0.3, -0.7};
  const GtoMatrix cube = gto_matrix(GtoSpec::cube(lambda), ExponentSet::tensor(2, 3), t);
  const GtoMatrix a = gto_matrix(GtoSpec::interval(lambda[0]), ExponentSet::total_degree(1, 3), Point{t[0]});
  const GtoMatrix b = gto_matrix(GtoSpec::interval(lambda[1]), ExponentSet::total_degree(1, 3), Point{t[1]});
  // Exponents are lexicographic in (k1, k2), so the index is 4 k1 + k2.
  for (int i1 = 0; i1 < 4; ++i1)
    for (int i2 = 0; i2 < 4; ++i2)
      for (int j1 = 0; j1 < 4; ++j1)
        for (int j2 = 0; j2 < 4; ++j2)
          EXPECT_NEAR(cube.matrix(4 * i1 + i2, 4 * j1 + j2), a.matrix(i1, j1) * b.matrix(i2, j2), 1e-11);
}

TEST(GtoMatrix, SpaceInvariance) {
  EXPECT_LE(gto_matrix(GtoSpec::cube({0.0, 1.0}), lattice_points(ConvexBody::octahedron(2, 1.0), 4), Point{0.4, 0.9})
                .residual,
            1e-8);
  EXPECT_LE(gto_matrix(GtoSpec::ball_chebyshev(3), ExponentSet::total_degree(3, 4), Point{-0.2}).residual, 1e-8);
  EXPECT_LE(gto_matrix(GtoSpec::ball_gegenbauer(2, 0.5), ExponentSet::total_degree(2, 5), Point{0.7}).residual, 1e-8);
}

TEST(PointRestriction, CubeVertices) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const GtoSpec cube = GtoSpec::cube({0.5, 1.5});
  const Polynomial p = random_polynomial(ExponentSet::tensor(2, 4), rng);
  for (const Point& x0 : {Point{1.0, 1.0}, Point{-1.0, 1.0}, Point{1.0, -1.0}}) {
    const Point t{u(rng), u(rng)};
    EXPECT_NEAR(apply_cube(cube, field(p), t, x0), p(Point{t[0] * x0[0], t[1] * x0[1]}), 1e-10);
  }
}

TEST(PointRestriction, SphereIsTangentialAverage) {
  // On S^1 the Chebyshev operator averages P over t x0 + sqrt(1-t^2) sin(th) x0_perp.
  std::mt19937_64 rng(12);
  const GtoSpec ball = GtoSpec::ball_chebyshev(2);
  const Polynomial q = random_polynomial(ExponentSet::total_degree(2, 6), rng);
  const double phi = 0.7;
  const Point x0{std::cos(phi), std::sin(phi)};
  const Point perp{-std::sin(phi), std::cos(phi)};
  for (double t : {-0.6, 0.0, 0.45}) {
    const int nodes = 64;
    double avg = 0.0;
    for (int k = 0; k < nodes; ++k) {
      const double s = std::sqrt(1 - t * t) * std::sin(2 * std::numbers::pi * k / nodes);
      avg += q(Point{t * x0[0] + s * perp[0], t * x0[1] + s * perp[1]}) / nodes;
    }
    EXPECT_NEAR(apply_ball(ball, field(q), t, x0), avg, 1e-12);
  }
  // So T_t P(x0) = P(t x0) fails: Phi_{0,1} = 1 - 1.5|x|^2 gives 1/4 against 1 at t = 0.
  EXPECT_NEAR(apply_ball(ball, field(ball_basis(0, 1, 2)), 0.0, x0), 0.25, 1e-14);
}

TEST(ApplyBall, CompletionIndependence) {
  std::mt19937_64 rng(3);
  const Polynomial q = random_polynomial(ExponentSet::total_degree(3, 4), rng);
  const Point x{0.3, -0.2, 0.5};
  const Eigen::MatrixXd h = householder_frame(x);
  // Another completion: rotate the last two rows.
  Eigen::MatrixXd other = h;
  const double c = std::cos(0.8), s = std::sin(0.8);
  other.row(1) = c * h.row(1) + s * h.row(2);
  other.row(2) = -s * h.row(1) + c * h.row(2);
  for (const GtoSpec& spec : {GtoSpec::ball_chebyshev(3), GtoSpec::ball_gegenbauer(3, 0.5)}) {
    for (double t : {-0.5, 0.2, 0.9}) {
      EXPECT_NEAR(apply_ball(spec, field(q), t, x, &h), apply_ball(spec, field(q), t, x, &other), 1e-10);
    }
  }
}

TEST(HouseholderFrame, FirstRowAndOrthogonality) {
  const Point x{0.3, -0.4, 0.2};
  const Eigen::MatrixXd h = householder_frame(x);
  const double r = std::hypot(x[0], x[1], x[2]);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(h(0, j), x[j] / r, 1e-15);
  EXPECT_LE((h * h.transpose() - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((householder_frame(Point{0.0, 0.0}) - Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(ApplyBall, SmallLambdaApproachesChebyshev) {
  std::mt19937_64 rng(4);
  const Polynomial q = random_polynomial(ExponentSet::total_degree(2, 4), rng);
  const GtoSpec cheb = GtoSpec::ball_chebyshev(2);
  const GtoSpec geg = GtoSpec::ball_gegenbauer(2, 1e-3);
  for (const Point& x : {Point{0.2, 0.3}, Point{-0.6, 0.1}, Point{0.0, 0.0}}) {
    for (double t : {-0.4, 0.3, 0.8}) {
      EXPECT_NEAR(apply_ball(geg, field(q), t, x), apply_ball(cheb, field(q), t, x), 1e-2);
    }
  }
}

TEST(Contraction, ConstantIsEqualityCase) {
  const ExponentSet constants = ExponentSet::total_degree(2, 0);
  const ContractionReport r = contraction_check(GtoSpec::ball_chebyshev(2), constants, 1.5, 10);
  EXPECT_NEAR(r.max_ratio, 1.0, 1e-12);
  EXPECT_NEAR(r.min_ratio, 1.0, 1e-12);
}

TEST(Contraction, PropertyTests) {
  EXPECT_LE(contraction_check(GtoSpec::interval(0.5), ExponentSet::total_degree(1, 6), 2.0, 100).max_ratio,
            1 + 1e-10);
  EXPECT_LE(contraction_check(GtoSpec::ball_chebyshev(2), ExponentSet::total_degree(2, 4), 1.0, 100).max_ratio,
            1 + 1e-9);
  EXPECT_LE(contraction_check(GtoSpec::cube({0.0, 1.0}), ExponentSet::tensor(2, 3), 3.0, 50).max_ratio, 1 + 1e-9);
  EXPECT_LE(contraction_check(GtoSpec::ball_gegenbauer(2, 0.5), ExponentSet::total_degree(2, 3), 4.0, 30).max_ratio,
            1 + 1e-9);
}

TEST(TransferToBoundary, ReproducesInteriorValue) {
  std::mt19937_64 rng(5);
  const Polynomial p = random_polynomial(ExponentSet::tensor(2, 3), rng);
  const GtoSpec cube = GtoSpec::cube({0.5, 0.5});
  const Point y0{0.3, -0.8};
  const BoundaryTransfer bt = transfer_to_boundary(cube, y0);
  for (double v : bt.x0) EXPECT_DOUBLE_EQ(std::abs(v), 1.0);
  EXPECT_NEAR(apply_cube(cube, field(p), bt.t, bt.x0), p(y0), 1e-12);
  const GtoSpec interval = GtoSpec::interval(1.0);
  const Polynomial q = random_polynomial(ExponentSet::total_degree(1, 5), rng);
  const BoundaryTransfer bi = transfer_to_boundary(interval, Point{-0.35});
  EXPECT_NEAR(apply_interval(interval, field(q), bi.t[0], bi.x0[0]), q(Point{-0.35}), 1e-12);
  try {
    transfer_to_boundary(GtoSpec::ball_chebyshev(2), Point{0.3, 0.4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}
