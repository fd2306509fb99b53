#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nikolskii/asymptotics.hpp"
#include "nikolskii/sharpconst.hpp"

using namespace nikolskii;

namespace {

constexpr double kPi = std::numbers::pi;

ScanOptions with_grid(std::vector<int> grid) {
  ScanOptions o;
  o.solver.restarts = 4;
  o.grid = std::move(grid);
  return o;
}

}  // namespace

TEST(Scan, KappaMatchesTheorem) {
  EXPECT_DOUBLE_EQ(cube_limit_scan(ConvexBody::cube(2, 1.0), {0.5, 1.0}, 2.0, 4).kappa, (2 + 2 * 1.5) / 2.0);
  EXPECT_DOUBLE_EQ(point_limit_scan(ConvexBody::cube(1, 1.0), {1.0}, {0.0}, 4.0, 4).kappa, 2 / 4.0);
  EXPECT_DOUBLE_EQ(ball_limit_scan(0.5, 3.0, 2, 4).kappa, 3 / 3.0);
}

TEST(CubeScan, ChebyshevIntervalClosedForm) {
  const ScanResult r = cube_limit_scan(ConvexBody::cube(1, 1.0), {0.0}, 2.0, 40);
  ASSERT_EQ(r.grid.size(), 20u);
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    const double n = r.grid[i];
    EXPECT_NEAR(r.scaled[i], std::sqrt((2 * n + 1) / kPi / n), 1e-12);
  }
  ASSERT_TRUE(r.predicted.has_value());
  EXPECT_NEAR(*r.predicted, std::sqrt(2 / kPi), 1e-14);
  EXPECT_LE(r.gap, 1e-3);
  EXPECT_TRUE(r.within_bracket);
}

TEST(CubeScan, LegendreIntervalClosedForm) {
  const ScanResult r = cube_limit_scan(ConvexBody::cube(1, 1.0), {0.5}, 2.0, 30);
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    const double n = r.grid[i];
    EXPECT_NEAR(r.scaled[i], (n + 1) / n / std::sqrt(2.0), 1e-12);
  }
  EXPECT_NEAR(*r.predicted, 1 / std::sqrt(2.0), 1e-14);
  // Order-1 Richardson is exact on s_n = c (1 + 1/n).
  EXPECT_LE(r.gap, 1e-12);
  ASSERT_TRUE(r.envelope_ok.has_value());
  EXPECT_TRUE(*r.envelope_ok);
}

TEST(CubeScan, SingleGridPointIsLowConfidence) {
  const ScanResult r = cube_limit_scan(ConvexBody::cube(1, 1.0), {0.5}, 2.0, 1);
  ASSERT_EQ(r.grid, std::vector<int>{1});
  EXPECT_TRUE(r.low_confidence);
  EXPECT_DOUBLE_EQ(r.extrapolated, r.scaled.back());
}

TEST(PointScan, ZeroScaleIsMassRatio) {
  const ScanResult r = point_limit_scan(ConvexBody::cube(1, 1.0), {0.0}, {-0.5}, 3.0, 4, with_grid({0, 2, 4}));
  EXPECT_NEAR(r.raw[0], std::pow(kPi, -1 / 3.0), 1e-12);
  EXPECT_TRUE(std::isnan(r.scaled[0]));
}

TEST(PointScan, ChebyshevApproachesEntireConstant) {
  const ScanResult r = point_limit_scan(ConvexBody::cube(1, 1.0), {0.0}, {-0.5}, 2.0, 40);
  EXPECT_LE(std::abs(r.scaled.back() * std::sqrt(kPi) - 1), 0.02);
  EXPECT_LE(std::abs(r.extrapolated * std::sqrt(kPi) - 1), 0.02);
}

TEST(PointScan, SquareIsTensorSquare) {
  const ScanResult one = point_limit_scan(ConvexBody::cube(1, 1.0), {0.0}, {0.0}, 2.0, 16);
  const ScanResult two = point_limit_scan(ConvexBody::cube(2, 1.0), {0.0, 0.0}, {0.0, 0.0}, 2.0, 16);
  for (std::size_t i = 0; i < one.grid.size(); ++i) EXPECT_NEAR(two.scaled[i], one.scaled[i] * one.scaled[i], 1e-10);
  EXPECT_NEAR(two.extrapolated, 1 / kPi, 0.03);
}

TEST(BallScan, DiskChebyshevClosedForm) {
  const ScanResult r = ball_limit_scan(0.0, 2.0, 2, 20);
  const double predicted = reduction_constants(2, 2.0, 0.0).a2 * exact_entire_p2(2, 0.0);
  EXPECT_NEAR(*r.predicted, predicted, 1e-14);
  for (std::size_t i = 0; i < r.grid.size(); ++i)
    EXPECT_NEAR(r.raw[i], exact_ball_p2(r.grid[i], 2, 0.0), 1e-10 * r.raw[i]);
  EXPECT_LE(std::abs(r.scaled.back() - predicted) / predicted, 0.05 + 1e-12);
  EXPECT_LE(r.gap, 1e-3);
}

TEST(BallScan, IntervalCaseMatchesCubeScan) {
  const ScanResult ball = ball_limit_scan(0.5, 2.0, 1, 12);
  const ScanResult cube = cube_limit_scan(ConvexBody::cube(1, 1.0), {0.5}, 2.0, 12);
  for (std::size_t i = 0; i < ball.grid.size(); ++i) EXPECT_NEAR(ball.scaled[i], cube.scaled[i], 1e-12);
}

TEST(BallScan, L1TailStabilizesAndIsSeedStable) {
  ScanOptions a;
  a.solver.restarts = 4;
  a.rule_degree_per_degree = 100;
  const ScanResult ra = ball_limit_scan(0.0, 1.0, 2, 40, a);
  EXPECT_FALSE(ra.predicted.has_value());
  EXPECT_LE(ra.tail_spread / ra.scaled.back(), 0.02);
  EXPECT_LT(ra.tail_spread, ra.head_spread);
  ScanOptions b = a;
  b.solver.seed = 99;
  b.grid = {38, 40};
  const ScanResult rb = ball_limit_scan(0.0, 1.0, 2, 40, b);
  EXPECT_LE(std::abs(ra.extrapolated - rb.extrapolated) / ra.extrapolated, 0.01);
}

TEST(BallScan, TailSpreadShrinks) {
  for (const ScanResult& r : {ball_limit_scan(0.5, 2.0, 3, 16), cube_limit_scan(ConvexBody::cube(2, 1.0), {0.5, 0.0}, 2.0, 12),
                              point_limit_scan(ConvexBody::octahedron(2, 1.0), {1.0, 0.0}, {0.0, 0.5}, 2.0, 12)}) {
    EXPECT_LT(r.tail_spread, r.head_spread) << to_string(r.kind);
    EXPECT_TRUE(r.within_bracket) << to_string(r.kind);
  }
}

TEST(Chain, ClosedFormAnchors) {
  const ChainReport a = chain_check(1, 0.0);
  EXPECT_NEAR(a.predicted, std::sqrt(2 / kPi), 1e-14);
  EXPECT_LE(a.analytic_residual, 1e-12);
  // s_n = sqrt(2/pi) sqrt(1 + 1/(2n)), so the gap at n = 10^6 is 1/(4n).
  EXPECT_NEAR(a.numeric_residual, 0.25e-6, 1e-9);
  const ChainReport b = chain_check(1, 0.5);
  EXPECT_NEAR(b.predicted, 1 / std::sqrt(2.0), 1e-14);
  EXPECT_LE(b.analytic_residual, 1e-12);
  const ChainReport c = chain_check(2, 0.0);
  EXPECT_LE(c.numeric_residual, 1e-5);
}

TEST(Chain, EnvelopeHoldsForConfiguredFamilies) {
  for (const auto& [m, lambda] : {std::pair{1, 0.0}, std::pair{1, 0.5}, std::pair{2, 0.0}, std::pair{3, 0.5}}) {
    const ChainReport r = chain_check(m, lambda);
    EXPECT_LE(r.analytic_residual, 1e-9) << m << ' ' << lambda;
    EXPECT_LE(r.envelope_ratio, 1.0) << m << ' ' << lambda;
  }
}

TEST(Substitution, Examples) {
  const SubstitutionReport origin = substitution_gap_check(0.5, {0.0}, {0.0}, 1);
  EXPECT_LE(origin.max_violation, 0.0);
  const SubstitutionReport cosine = substitution_gap_check(0.3, {0.0}, {0.0}, 20000, 4);
  EXPECT_DOUBLE_EQ(cosine.c13, 1.0);
  EXPECT_LE(cosine.max_violation, 1e-12);
  const SubstitutionReport mixed = substitution_gap_check(0.9, {1.0, 2.0}, {-0.5, 3.0}, 100000, 7);
  EXPECT_DOUBLE_EQ(mixed.c13, 7.0);
  EXPECT_EQ(mixed.samples, 100000);
  EXPECT_LE(mixed.max_violation, 1e-12);
}
