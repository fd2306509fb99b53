#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "nikolskii/error.hpp"
#include "nikolskii/norms.hpp"
#include "nikolskii/orthonormal.hpp"
#include "nikolskii/polynomial.hpp"
#include "nikolskii/special.hpp"

using namespace nikolskii;

namespace {

constexpr double kPi = std::numbers::pi;

Polynomial random_polynomial(const ExponentSet& set, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> c(set.size());
  for (double& v : c) v = g(rng);
  return Polynomial(set, c, Basis::kChebyshev);
}

double inner(const Polynomial& a, const Polynomial& b, const QuadratureRule& rule) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * a(rule.node(i)) * b(rule.node(i));
  return s;
}

double max_coeff(const Polynomial& p) {
  double m = 0.0;
  for (double c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

TEST(Evaluate, Examples) {
  const Polynomial p = Polynomial::from_terms(1, {{{0}, 1.0}, {{2}, -2.0}});
  EXPECT_DOUBLE_EQ(p({1.0}), -1.0);
  const Polynomial q = Polynomial::from_terms(2, {{{1, 1}, 1.0}});
  EXPECT_DOUBLE_EQ(q({0.5, 0.5}), 0.25);
  const Polynomial t3(ExponentSet(1, {{3}}), {1.0}, Basis::kChebyshev);
  EXPECT_NEAR(t3({0.3}), -0.792, 1e-15);
}

TEST(Evaluate, DimensionMismatchThrows) {
  const Polynomial q = Polynomial::from_terms(2, {{{1, 1}, 1.0}});
  try {
    (void)q({0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(Evaluate, LinearInCoefficients) {
  std::mt19937_64 rng(1);
  const ExponentSet set = ExponentSet::total_degree(2, 6);
  const Polynomial a = random_polynomial(set, rng), b = random_polynomial(set, rng);
  std::vector<double> c(set.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = 2 * a.coeffs()[k] - 3 * b.coeffs()[k];
  const Polynomial comb(set, c, Basis::kChebyshev);
  const std::vector<double> x{0.3, -0.7};
  EXPECT_NEAR(comb(x), 2 * a(x) - 3 * b(x), 1e-12);
}

TEST(Evaluate, BasisConversionRoundTrip) {
  std::mt19937_64 rng(2);
  const Polynomial p = random_polynomial(ExponentSet::total_degree(3, 5), rng);
  const Polynomial mono = p.to_monomial();
  const Polynomial back = mono.to_chebyshev();
  for (const auto& x : {std::vector<double>{0.1, 0.2, 0.3}, std::vector<double>{-1.0, 1.0, 0.5}}) {
    EXPECT_NEAR(mono(x), p(x), 1e-11);
    EXPECT_NEAR(back(x), p(x), 1e-11);
  }
  EXPECT_LE(back.distance(p), 1e-11);
}

TEST(Evaluate, StableAtHighDegree) {
  const Polynomial t60(ExponentSet(1, {{60}}), {1.0}, Basis::kChebyshev);
  for (double u : {-1.0, -0.37, 0.0, 0.81, 1.0}) EXPECT_NEAR(t60({u}), chebyshev_t(60, u), 1e-12);
}

TEST(Gegenbauer, Examples) {
  const Polynomial c1 = gegenbauer_polynomial(1, 0.5).to_monomial();
  EXPECT_NEAR(c1.monomial_coefficient({1}), 1.0, 1e-15);
  const Polynomial c2 = gegenbauer_polynomial(2, 0.5).to_monomial();
  EXPECT_NEAR(c2.monomial_coefficient({2}), 1.5, 1e-15);
  EXPECT_NEAR(c2.monomial_coefficient({0}), -0.5, 1e-15);
  const Polynomial t2 = gegenbauer_polynomial(2, 0.0).to_monomial();
  EXPECT_NEAR(t2.monomial_coefficient({2}), 2.0, 1e-15);
  EXPECT_NEAR(t2.monomial_coefficient({0}), -1.0, 1e-15);
}

TEST(Gegenbauer, PolynomialMatchesRecurrence) {
  for (double lambda : {0.0, 0.5, 1.25, 3.0}) {
    for (int n = 0; n <= 12; ++n) {
      const Polynomial p = gegenbauer_polynomial(n, lambda);
      for (double u : {-1.0, -0.4, 0.2, 0.9, 1.0}) {
        EXPECT_NEAR(p({u}), gegenbauer(n, lambda, u), 1e-10 * std::max(1.0, gegenbauer_at_one(n, lambda)));
      }
      EXPECT_LE(std::abs(p({1.0}) / gegenbauer_at_one(n, lambda) - 1), 1e-12);
    }
  }
}

TEST(Orthonormalize, LegendreNormalization) {
  const OrthonormalSystem sys = orthonormalize(ExponentSet(1, {{0}, {1}}), WeightSpec::gegenbauer_interval(0.5));
  EXPECT_LE(sys.gram_residual(), 1e-10);
  EXPECT_NEAR(std::abs(sys.function(0)({0.4})), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(std::abs(sys.function(1)({0.4})), std::sqrt(1.5) * 0.4, 1e-14);
}

TEST(Orthonormalize, ConstantOnDisk) {
  const OrthonormalSystem sys = orthonormalize(ExponentSet(2, {{0, 0}}), WeightSpec::ball_radial(2, 0.5));
  EXPECT_NEAR(std::abs(sys.function(0)({0.1, 0.2})), 1 / std::sqrt(kPi), 1e-14);
}

TEST(Orthonormalize, ChebyshevWeightRecoversT2) {
  const OrthonormalSystem sys = orthonormalize(ExponentSet(1, {{0}, {2}}), WeightSpec::gegenbauer_interval(0.0),
                                               Basis::kMonomial);
  const Polynomial phi = sys.function(1).to_monomial();
  const double scale = phi.monomial_coefficient({2}) / 2.0;
  EXPECT_NEAR(phi.monomial_coefficient({0}) / scale, -1.0, 1e-13);
  // ||T_2||^2 = pi / 2 under (1-u^2)^{-1/2}.
  EXPECT_NEAR(scale * scale * kPi / 2, 1.0, 1e-13);
}

TEST(Orthonormalize, GramResidualAcrossWeights) {
  const std::vector<std::pair<ExponentSet, WeightSpec>> cases = {
      {ExponentSet::total_degree(1, 30), WeightSpec::gegenbauer_interval(1.5)},
      {ExponentSet::tensor(2, 6), WeightSpec::gegenbauer_cube({0.0, 1.0})},
      {ExponentSet::total_degree(2, 10), WeightSpec::ball_radial(2, 0.5)},
      {ExponentSet::total_degree(3, 6), WeightSpec::ball_radial(3, 1.0)},
      {ExponentSet::total_degree(2, 6), WeightSpec::coordinate_product({1.0, 0.5}, {0.0, -0.5})}};
  for (const auto& [set, weight] : cases) {
    const OrthonormalSystem sys = orthonormalize(set, weight);
    EXPECT_EQ(sys.size(), set.size());
    EXPECT_LE(sys.gram_residual(), 1e-10) << to_string(weight.domain());
    // Independent check on a finer rule.
    const QuadratureRule fine = make_rule(weight, gram_rule_degree(set, weight) + 8);
    for (std::size_t i : {std::size_t{0}, set.size() / 2, set.size() - 1}) {
      EXPECT_NEAR(inner(sys.function(i), sys.function(i), fine), 1.0, 1e-10);
      if (i > 0) {
        EXPECT_NEAR(inner(sys.function(i), sys.function(0), fine), 0.0, 1e-10);
      }
    }
  }
}

TEST(Orthonormalize, RankDeficientRuleThrows) {
  const WeightSpec w = WeightSpec::gegenbauer_interval(0.5);
  try {
    orthonormalize(ExponentSet::total_degree(1, 6), w, interval_rule(0.0, 0.0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
}

TEST(Orthonormalize, KernelDiagonalIndependentOfOrder) {
  std::mt19937_64 rng(11);
  const std::vector<std::pair<ExponentSet, WeightSpec>> cases = {
      {ExponentSet::total_degree(2, 7), WeightSpec::ball_radial(2, 0.5)},
      {ExponentSet::tensor(2, 4), WeightSpec::gegenbauer_cube({0.5, 0.0})}};
  for (const auto& [set, weight] : cases) {
    const QuadratureRule rule = make_rule(weight, gram_rule_degree(set, weight));
    std::vector<std::size_t> o1(set.size()), o2(set.size());
    std::iota(o1.begin(), o1.end(), 0);
    std::iota(o2.begin(), o2.end(), 0);
    std::shuffle(o1.begin(), o1.end(), rng);
    std::shuffle(o2.begin(), o2.end(), rng);
    const OrthonormalSystem a = orthonormalize(set, weight, rule, Basis::kChebyshev, o1);
    const OrthonormalSystem b = orthonormalize(set, weight, rule, Basis::kChebyshev, o2);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int trial = 0; trial < 20; ++trial) {
      const std::vector<double> x{u(rng), u(rng)};
      EXPECT_NEAR(a.kernel_diagonal(x), b.kernel_diagonal(x), 1e-9 * a.kernel_diagonal(x));
    }
  }
}

TEST(Orthonormalize, KernelSectionReproduces) {
  std::mt19937_64 rng(4);
  const ExponentSet set = ExponentSet::total_degree(2, 5);
  const WeightSpec w = WeightSpec::ball_radial(2, 1.0);
  const OrthonormalSystem sys = orthonormalize(set, w);
  const Polynomial p = random_polynomial(set, rng);
  const std::vector<double> x0{0.3, -0.5};
  const QuadratureRule rule = make_rule(w, 12);
  EXPECT_NEAR(inner(p, sys.kernel_section(x0), rule), p(x0), 1e-11);
}

TEST(BallBasis, Examples) {
  const std::vector<double> x{0.3, -0.4};
  EXPECT_NEAR(ball_basis(0, 0, 2)(x), ball_basis(0, 0, 2)({0.0, 0.0}), 1e-15);
  const Polynomial b10 = ball_basis(1, 0, 2, {1, false});
  EXPECT_NEAR(b10(x) / b10({1.0, 0.0}), 0.3, 1e-15);
  const Polynomial b01 = ball_basis(0, 1, 2);
  EXPECT_NEAR(b01(x), 1 - 1.5 * (0.09 + 0.16), 1e-14);
  EXPECT_EQ(ball_basis(2, 3, 3).degree(), 8);
}

TEST(BallBasis, SolidHarmonicsAreHarmonic) {
  for (int l = 0; l <= kMaxHarmonicDegree3D; ++l) {
    for (int k = 0; k <= l; ++k) {
      for (bool sine : {false, true}) {
        if (sine && k == 0) continue;
        const Polynomial h = solid_harmonic(3, l, {k, sine});
        EXPECT_EQ(h.degree(), l);
        EXPECT_LE(max_coeff(h.laplacian()), 1e-10 * max_coeff(h)) << l << ' ' << k;
      }
    }
  }
  for (int l = 0; l <= 10; ++l) EXPECT_LE(max_coeff(solid_harmonic(2, l).laplacian()), 1e-10 * max_coeff(solid_harmonic(2, l)));
}

TEST(BallBasis, OrthogonalUnderChebyshevBallWeight) {
  for (int m : {2, 3}) {
    const WeightSpec w = WeightSpec::ball_radial(m, 0.0);
    const QuadratureRule rule = make_rule(w, 16);
    std::vector<Polynomial> basis;
    for (int l = 0; l <= 3; ++l)
      for (int N = 0; 2 * N + l <= 6; ++N) basis.push_back(ball_basis(l, N, m));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const double scale = std::sqrt(inner(basis[i], basis[i], rule) * inner(basis[j], basis[j], rule));
        EXPECT_NEAR(inner(basis[i], basis[j], rule) / scale, 0.0, 1e-12) << m << ' ' << i << ' ' << j;
      }
    }
  }
}

TEST(BallBasis, BeyondCatalogueThrows) {
  try {
    solid_harmonic(3, kMaxHarmonicDegree3D + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
}

TEST(SymmetrizeEven, Examples) {
  const Polynomial t = Polynomial::coordinate(1, 0);
  EXPECT_LE(max_coeff(symmetrize_even(t)), 1e-15);
  const Polynomial p = Polynomial::from_terms(1, {{{0}, 1.0}, {{1}, 1.0}, {{2}, 1.0}});
  const Polynomial e = symmetrize_even(p).to_monomial();
  EXPECT_NEAR(e.monomial_coefficient({0}), 1.0, 1e-15);
  EXPECT_NEAR(e.monomial_coefficient({1}), 0.0, 1e-15);
  EXPECT_NEAR(e.monomial_coefficient({2}), 1.0, 1e-15);
  const Polynomial q = Polynomial::from_terms(2, {{{1, 1}, 1.0}, {{2, 2}, 1.0}});
  const Polynomial qe = symmetrize_even(q).to_monomial();
  EXPECT_NEAR(qe.monomial_coefficient({1, 1}), 0.0, 1e-15);
  EXPECT_NEAR(qe.monomial_coefficient({2, 2}), 1.0, 1e-15);
}

TEST(SymmetrizeEven, IdempotentAndContracting) {
  std::mt19937_64 rng(8);
  const std::vector<WeightSpec> weights = {WeightSpec::gegenbauer_cube({0.5, 1.0}), WeightSpec::ball_radial(2, 0.5),
                                           WeightSpec::coordinate_product({1.0, 0.0}, {0.0, 0.5})};
  for (const WeightSpec& w : weights) {
    for (int trial = 0; trial < 4; ++trial) {
      const Polynomial p = random_polynomial(ExponentSet::total_degree(2, 5), rng);
      const Polynomial e = symmetrize_even(p);
      EXPECT_LE(symmetrize_even(e).distance(e), 1e-14);
      const Polynomial kept = e.pruned(1e-14);
      for (const auto& k : kept.exponents().exponents())
        for (int v : k) EXPECT_EQ(v % 2, 0);
      EXPECT_NEAR(e({0.0, 0.0}), p({0.0, 0.0}), 1e-13);
      for (double q : {1.0, 2.0, 4.0}) EXPECT_LE(weighted_norm(e, w, q), weighted_norm(p, w, q) * (1 + 1e-9));
    }
  }
}
