#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "nikolskii/geometry.hpp"

namespace nikolskii {

/// Coefficient basis attached to an exponent set. `kChebyshev` means the
/// tensor products prod_j T_{k_j}(x_j); over a lower set it spans the same
/// space as the monomials and stays well conditioned at high degree.
enum class Basis { kMonomial, kChebyshev };

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(ExponentSet exponents, std::vector<double> coeffs, Basis basis = Basis::kMonomial);

  static Polynomial constant(int dim, double value);
  /// Monomial-basis polynomial from (exponent, coefficient) terms; repeated
  /// exponents are summed.
  static Polynomial from_terms(int dim, const std::vector<std::pair<MultiIndex, double>>& terms);
  /// x_j as a polynomial in `dim` variables.
  static Polynomial coordinate(int dim, int j);

  int dim() const { return exponents_.dim(); }
  Basis basis() const { return basis_; }
  const ExponentSet& exponents() const { return exponents_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  /// Largest total degree carrying a nonzero coefficient.
  int degree() const;

  double evaluate(std::span<const double> x) const;
  double operator()(std::span<const double> x) const { return evaluate(x); }
  double operator()(std::initializer_list<double> x) const {
    return evaluate(std::span<const double>(x.begin(), x.size()));
  }

  /// Coefficient of x^k in the monomial expansion.
  double monomial_coefficient(const MultiIndex& k) const;

  Polynomial to_monomial() const;
  /// Re-expands in the tensor Chebyshev basis.
  Polynomial to_chebyshev() const;
  /// Drops terms with |c| <= tol (monomial or Chebyshev, basis kept).
  Polynomial pruned(double tol = 0.0) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double scalar) const;

  /// Substitutes polynomials for each variable: result(y) = P(subs_0(y), ..., subs_{m-1}(y)).
  Polynomial compose(const std::vector<Polynomial>& substitutions) const;

  Polynomial derivative(int j) const;
  Polynomial laplacian() const;

  /// Max |coefficient difference| after expansion in monomials.
  double distance(const Polynomial& other) const;

 private:
  ExponentSet exponents_;
  std::vector<double> coeffs_;
  Basis basis_ = Basis::kMonomial;
};

/// Values of every basis function of `exponents` at `x`, in exponent order.
void basis_values(const ExponentSet& exponents, Basis basis, std::span<const double> x,
                  std::span<double> out);

/// Row i holds the basis values at point i of a flat row-major point list.
Eigen::MatrixXd basis_matrix(const ExponentSet& exponents, Basis basis,
                             std::span<const double> points);

/// Monomial coefficients of T_n.
std::vector<double> chebyshev_coefficients(int n);

/// C_n^lambda as a univariate monomial-basis polynomial (T_n for lambda == 0).
Polynomial gegenbauer_polynomial(int n, double lambda);

/// Average over the 2^m coordinate sign flips; keeps only all-even multi-indices.
Polynomial symmetrize_even(const Polynomial& p);

/// Which real harmonic of degree l to take: `order` is k (0 <= k <= l) and
/// `sine` selects Im instead of Re of (x_1 + i x_2)^k.
struct HarmonicIndex {
  int order = -1;  // -1: default (k = l for m = 2, k = 0 for m = 3)
  bool sine = false;
};

inline constexpr int kMaxHarmonicDegree2D = 24;
inline constexpr int kMaxHarmonicDegree3D = 8;

/// Real solid harmonic of degree l in m in {2,3} variables.
/// m = 2: Re/Im (x_1 + i x_2)^l. m = 3: r^l P_l^k(x_3 / r) times the
/// cos/sin(k phi) factor, expanded as a polynomial.
Polynomial solid_harmonic(int m, int l, HarmonicIndex index = {});

/// Phi_{l,N}(x) = P_l(x) C_{2N}^{l+(m-1)/2}(sqrt(1-|x|^2)); a polynomial of
/// total degree l + 2N because C_{2N} is even.
Polynomial ball_basis(int l, int N, int m, HarmonicIndex index = {});

}  // namespace nikolskii
