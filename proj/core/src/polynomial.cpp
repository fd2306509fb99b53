#include "nikolskii/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "nikolskii/error.hpp"

namespace nikolskii {

namespace {

using TermMap = std::map<MultiIndex, double>;

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

double factorial_ratio(int n, int k) {  // n! / k!
  double value = 1.0;
  for (int i = k + 1; i <= n; ++i) value *= i;
  return value;
}

// Chebyshev coefficients of x^n: x^n = sum_i a_i T_i.
std::vector<double> monomial_in_chebyshev(int n) {
  std::vector<double> a(n + 1, 0.0);
  const double scale = std::ldexp(1.0, 1 - n);
  for (int j = 0; 2 * j <= n; ++j) {
    double c = scale * binomial(n, j);
    if (2 * j == n) c *= 0.5;
    a[n - 2 * j] += c;
  }
  if (n == 0) a[0] = 1.0;
  return a;
}

TermMap to_terms(const Polynomial& p) {
  TermMap terms;
  const auto& exps = p.exponents().exponents();
  if (p.basis() == Basis::kMonomial) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (p.coeffs()[i] != 0.0) terms[exps[i]] += p.coeffs()[i];
    }
    return terms;
  }
  const int m = p.dim();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const double c = p.coeffs()[i];
    if (c == 0.0) continue;
    std::vector<std::vector<double>> per_axis;
    for (int j = 0; j < m; ++j) per_axis.push_back(chebyshev_coefficients(exps[i][j]));
    MultiIndex k(m, 0);
    auto recurse = [&](auto&& self, int j, double acc) -> void {
      if (j == m) {
        terms[k] += acc;
        return;
      }
      for (std::size_t q = 0; q < per_axis[j].size(); ++q) {
        if (per_axis[j][q] == 0.0) continue;
        k[j] = static_cast<int>(q);
        self(self, j + 1, acc * per_axis[j][q]);
      }
    };
    recurse(recurse, 0, c);
  }
  return terms;
}

Polynomial from_map(int dim, const TermMap& terms, Basis basis = Basis::kMonomial) {
  std::vector<MultiIndex> exps;
  std::vector<double> coeffs;
  for (const auto& [k, c] : terms) {
    exps.push_back(k);
    coeffs.push_back(c);
  }
  if (exps.empty()) {
    exps.push_back(MultiIndex(dim, 0));
    coeffs.push_back(0.0);
  }
  return Polynomial(ExponentSet(dim, std::move(exps)), std::move(coeffs), basis);
}

}  // namespace

std::vector<double> chebyshev_coefficients(int n) {
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) next[i + 1] += 2.0 * cur[i];
    for (int i = 0; i < static_cast<int>(prev.size()); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial::Polynomial(ExponentSet exponents, std::vector<double> coeffs, Basis basis)
    : exponents_(std::move(exponents)), coeffs_(std::move(coeffs)), basis_(basis) {
  require(coeffs_.size() == exponents_.size(), ErrorCode::kDimensionMismatch,
          "polynomial: coefficient count must match exponent count");
}

Polynomial Polynomial::constant(int dim, double value) {
  return Polynomial(ExponentSet(dim, {MultiIndex(dim, 0)}), {value});
}

Polynomial Polynomial::from_terms(int dim, const std::vector<std::pair<MultiIndex, double>>& terms) {
  TermMap map;
  for (const auto& [k, c] : terms) {
    require(static_cast<int>(k.size()) == dim, ErrorCode::kDimensionMismatch,
            "from_terms: multi-index has wrong dimension");
    map[k] += c;
  }
  return from_map(dim, map);
}

Polynomial Polynomial::coordinate(int dim, int j) {
  MultiIndex k(dim, 0);
  k.at(j) = 1;
  return from_terms(dim, {{k, 1.0}});
}

int Polynomial::degree() const {
  int best = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    int sum = 0;
    for (int v : exponents_[i]) sum += v;
    best = std::max(best, sum);
  }
  return best;
}

void basis_values(const ExponentSet& exponents, Basis basis, std::span<const double> x,
                  std::span<double> out) {
  const int m = exponents.dim();
  require(static_cast<int>(x.size()) == m, ErrorCode::kDimensionMismatch,
          "evaluate: point dimension does not match polynomial");
  thread_local std::vector<std::vector<double>> table;
  table.resize(m);
  for (int j = 0; j < m; ++j) {
    const int deg = exponents.axis_degree(j);
    auto& row = table[j];
    row.assign(deg + 1, 1.0);
    if (deg >= 1) row[1] = x[j];
    for (int k = 2; k <= deg; ++k) {
      row[k] = basis == Basis::kMonomial ? row[k - 1] * x[j] : 2.0 * x[j] * row[k - 1] - row[k - 2];
    }
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    double v = 1.0;
    for (int j = 0; j < m; ++j) v *= table[j][exponents[i][j]];
    out[i] = v;
  }
}

Eigen::MatrixXd basis_matrix(const ExponentSet& exponents, Basis basis,
                             std::span<const double> points) {
  const std::size_t m = static_cast<std::size_t>(exponents.dim());
  require(points.size() % m == 0, ErrorCode::kDimensionMismatch, "basis_matrix: ragged point list");
  const std::size_t n = points.size() / m;
  Eigen::MatrixXd out(n, exponents.size());
  std::vector<double> row(exponents.size());
  for (std::size_t i = 0; i < n; ++i) {
    basis_values(exponents, basis, points.subspan(i * m, m), row);
    for (std::size_t c = 0; c < row.size(); ++c) out(i, c) = row[c];
  }
  return out;
}

double Polynomial::evaluate(std::span<const double> x) const {
  thread_local std::vector<double> values;
  values.resize(exponents_.size());
  basis_values(exponents_, basis_, x, values);
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += coeffs_[i] * values[i];
  return sum;
}

double Polynomial::monomial_coefficient(const MultiIndex& k) const {
  const TermMap terms = to_terms(*this);
  auto it = terms.find(k);
  return it == terms.end() ? 0.0 : it->second;
}

Polynomial Polynomial::to_monomial() const {
  if (basis_ == Basis::kMonomial) return *this;
  return from_map(dim(), to_terms(*this));
}

Polynomial Polynomial::to_chebyshev() const {
  if (basis_ == Basis::kChebyshev) return *this;
  const int m = dim();
  TermMap out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0.0) continue;
    std::vector<std::vector<double>> per_axis;
    for (int j = 0; j < m; ++j) per_axis.push_back(monomial_in_chebyshev(exponents_[i][j]));
    MultiIndex k(m, 0);
    auto recurse = [&](auto&& self, int j, double acc) -> void {
      if (j == m) {
        out[k] += acc;
        return;
      }
      for (std::size_t q = 0; q < per_axis[j].size(); ++q) {
        if (per_axis[j][q] == 0.0) continue;
        k[j] = static_cast<int>(q);
        self(self, j + 1, acc * per_axis[j][q]);
      }
    };
    recurse(recurse, 0, coeffs_[i]);
  }
  return from_map(m, out, Basis::kChebyshev);
}

Polynomial Polynomial::pruned(double tol) const {
  std::vector<MultiIndex> exps;
  std::vector<double> coeffs;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (std::abs(coeffs_[i]) > tol) {
      exps.push_back(exponents_[i]);
      coeffs.push_back(coeffs_[i]);
    }
  }
  if (exps.empty()) return Polynomial(ExponentSet(dim(), {MultiIndex(dim(), 0)}), {0.0}, basis_);
  return Polynomial(ExponentSet(dim(), std::move(exps)), std::move(coeffs), basis_);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require(dim() == other.dim(), ErrorCode::kDimensionMismatch, "polynomial +: dimension mismatch");
  TermMap terms = to_terms(*this);
  for (const auto& [k, c] : to_terms(other)) terms[k] += c;
  return from_map(dim(), terms);
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + other * -1.0; }

Polynomial Polynomial::operator*(double scalar) const {
  Polynomial out = *this;
  for (double& c : out.coeffs_) c *= scalar;
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require(dim() == other.dim(), ErrorCode::kDimensionMismatch, "polynomial *: dimension mismatch");
  const TermMap a = to_terms(*this);
  const TermMap b = to_terms(other);
  TermMap out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      MultiIndex k = ka;
      for (std::size_t j = 0; j < k.size(); ++j) k[j] += kb[j];
      out[k] += ca * cb;
    }
  }
  return from_map(dim(), out);
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& substitutions) const {
  require(static_cast<int>(substitutions.size()) == dim(), ErrorCode::kDimensionMismatch,
          "compose: need one substitution per variable");
  const int target_dim = substitutions.front().dim();
  Polynomial result = constant(target_dim, 0.0);
  const TermMap terms = to_terms(*this);
  // power caches per variable
  std::vector<std::vector<Polynomial>> powers(dim());
  for (const auto& [k, c] : terms) {
    Polynomial term = constant(target_dim, c);
    for (int j = 0; j < dim(); ++j) {
      auto& cache = powers[j];
      if (cache.empty()) cache.push_back(constant(target_dim, 1.0));
      while (static_cast<int>(cache.size()) <= k[j]) cache.push_back(cache.back() * substitutions[j]);
      if (k[j] > 0) term = term * cache[k[j]];
    }
    result = result + term;
  }
  return result;
}

Polynomial Polynomial::derivative(int j) const {
  TermMap out;
  for (const auto& [k, c] : to_terms(*this)) {
    if (k.at(j) == 0) continue;
    MultiIndex d = k;
    d[j] -= 1;
    out[d] += c * k[j];
  }
  return from_map(dim(), out);
}

Polynomial Polynomial::laplacian() const {
  Polynomial out = constant(dim(), 0.0);
  for (int j = 0; j < dim(); ++j) out = out + derivative(j).derivative(j);
  return out;
}

double Polynomial::distance(const Polynomial& other) const {
  TermMap terms = to_terms(*this);
  for (const auto& [k, c] : to_terms(other)) terms[k] -= c;
  double best = 0.0;
  for (const auto& [k, c] : terms) best = std::max(best, std::abs(c));
  return best;
}

Polynomial gegenbauer_polynomial(int n, double lambda) {
  require(n >= 0, ErrorCode::kInvalidArgument, "gegenbauer_polynomial: n must be >= 0");
  require(lambda >= 0.0, ErrorCode::kInvalidArgument, "gegenbauer_polynomial: lambda must be >= 0");
  std::vector<double> coeffs;
  if (lambda == 0.0) {
    coeffs = chebyshev_coefficients(n);
  } else {
    std::vector<double> prev{1.0};
    std::vector<double> cur{0.0, 2.0 * lambda};
    if (n == 0) {
      coeffs = prev;
    } else {
      for (int k = 2; k <= n; ++k) {
        std::vector<double> next(k + 1, 0.0);
        for (int i = 0; i < static_cast<int>(cur.size()); ++i) {
          next[i + 1] += 2.0 * (k + lambda - 1.0) * cur[i] / k;
        }
        for (int i = 0; i < static_cast<int>(prev.size()); ++i) {
          next[i] -= (k + 2.0 * lambda - 2.0) * prev[i] / k;
        }
        prev = std::move(cur);
        cur = std::move(next);
      }
      coeffs = cur;
    }
  }
  std::vector<std::pair<MultiIndex, double>> terms;
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) {
    if (coeffs[i] != 0.0) terms.push_back({{i}, coeffs[i]});
  }
  return Polynomial::from_terms(1, terms);
}

Polynomial symmetrize_even(const Polynomial& p) {
  // T_k and x^k share the parity of k, so the rule is basis independent.
  std::vector<double> coeffs = p.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (int v : p.exponents()[i]) {
      if (v % 2 != 0) {
        coeffs[i] = 0.0;
        break;
      }
    }
  }
  return Polynomial(p.exponents(), std::move(coeffs), p.basis()).pruned();
}

namespace {

// Re / Im of (x_1 + i x_2)^k in `dim` variables.
Polynomial planar_power(int dim, int k, bool imaginary) {
  std::vector<std::pair<MultiIndex, double>> terms;
  for (int q = 0; q <= k; ++q) {
    if ((q % 2 == 1) != imaginary) continue;
    const double sign = ((imaginary ? (q - 1) / 2 : q / 2) % 2 == 0) ? 1.0 : -1.0;
    MultiIndex e(dim, 0);
    e[0] = k - q;
    e[1] = q;
    terms.push_back({e, sign * binomial(k, q)});
  }
  if (terms.empty()) terms.push_back({MultiIndex(dim, 0), 0.0});
  return Polynomial::from_terms(dim, terms);
}

}  // namespace

Polynomial solid_harmonic(int m, int l, HarmonicIndex index) {
  require(m == 2 || m == 3, ErrorCode::kUnsupported, "solid_harmonic: only m in {2,3}");
  require(l >= 0, ErrorCode::kInvalidArgument, "solid_harmonic: l must be >= 0");
  if (m == 2) {
    require(l <= kMaxHarmonicDegree2D, ErrorCode::kUnsupported, "solid_harmonic: l beyond catalogue");
    const int k = index.order < 0 ? l : index.order;
    require(k == l, ErrorCode::kInvalidArgument, "solid_harmonic: in 2D the order must equal l");
    require(!(index.sine && l == 0), ErrorCode::kInvalidArgument, "solid_harmonic: no sine harmonic at l = 0");
    return planar_power(2, l, index.sine);
  }
  require(l <= kMaxHarmonicDegree3D, ErrorCode::kUnsupported, "solid_harmonic: l beyond catalogue");
  const int k = index.order < 0 ? 0 : index.order;
  require(k <= l, ErrorCode::kInvalidArgument, "solid_harmonic: order must be <= l");
  require(!(index.sine && k == 0), ErrorCode::kInvalidArgument, "solid_harmonic: no sine harmonic at order 0");
  // Pi_l^k(z, r^2) = sum_j (-1)^j 2^{-l} C(l,j) C(2l-2j,l) (l-2j)!/(l-2j-k)! r^{2j} z^{l-2j-k}
  const Polynomial r2 = Polynomial::from_terms(3, {{{2, 0, 0}, 1.0}, {{0, 2, 0}, 1.0}, {{0, 0, 2}, 1.0}});
  Polynomial axial = Polynomial::constant(3, 0.0);
  Polynomial r2_power = Polynomial::constant(3, 1.0);
  for (int j = 0; 2 * j <= l - k; ++j) {
    const double c = ((j % 2 == 0) ? 1.0 : -1.0) * std::ldexp(1.0, -l) * binomial(l, j) *
                     binomial(2 * l - 2 * j, l) * factorial_ratio(l - 2 * j, l - 2 * j - k);
    const Polynomial z_power = Polynomial::from_terms(3, {{{0, 0, l - 2 * j - k}, c}});
    axial = axial + z_power * r2_power;
    r2_power = r2_power * r2;
  }
  return (axial * planar_power(3, k, index.sine)).pruned(1e-300);
}

Polynomial ball_basis(int l, int N, int m, HarmonicIndex index) {
  require(m == 2 || m == 3, ErrorCode::kUnsupported, "ball_basis: only m in {2,3}");
  require(N >= 0, ErrorCode::kInvalidArgument, "ball_basis: N must be >= 0");
  const Polynomial harmonic = solid_harmonic(m, l, index);
  const Polynomial radial_profile = gegenbauer_polynomial(2 * N, l + 0.5 * (m - 1));
  // C_{2N}(y) = sum_j c_{2j} y^{2j}, y^2 = 1 - |x|^2
  std::vector<std::pair<MultiIndex, double>> one_minus_r2_terms{{MultiIndex(m, 0), 1.0}};
  for (int j = 0; j < m; ++j) {
    MultiIndex e(m, 0);
    e[j] = 2;
    one_minus_r2_terms.push_back({e, -1.0});
  }
  const Polynomial one_minus_r2 = Polynomial::from_terms(m, one_minus_r2_terms);
  Polynomial profile = Polynomial::constant(m, 0.0);
  Polynomial power = Polynomial::constant(m, 1.0);
  for (int j = 0; j <= N; ++j) {
    profile = profile + power * radial_profile.monomial_coefficient({2 * j});
    power = power * one_minus_r2;
  }
  return (harmonic * profile).pruned(1e-300);
}

}  // namespace nikolskii
