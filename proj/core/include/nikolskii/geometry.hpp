#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nikolskii {

using MultiIndex = std::vector<int>;
using Point = std::vector<double>;

enum class BodyKind { kCube, kBall, kOctahedron, kLpBall, kParallelepiped };

std::string to_string(BodyKind kind);

/// Centrally symmetric convex body from the family
/// { t : (sum_j |t_j / sigma_j|^q)^{1/q} <= 1 }, q in [1, inf].
///
/// Cube, ball and octahedron are the equal-sigma members with q = inf, 2, 1.
/// Construction canonicalizes: lp_ball with q = inf becomes a parallelepiped,
/// equal sigmas with q in {1, 2, inf} become octahedron/ball/cube. Every member
/// is symmetric about all coordinate hyperplanes.
class ConvexBody {
 public:
  static ConvexBody cube(int dim, double half_side);
  static ConvexBody ball(int dim, double radius);
  static ConvexBody octahedron(int dim, double radius);
  static ConvexBody lp_ball(double exponent, std::vector<double> sigma);
  /// Axis-aligned box prod_j [-|sigma_j|, |sigma_j|]; zero sigma_j pins t_j = 0.
  static ConvexBody parallelepiped(std::vector<double> sigma);

  BodyKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(sigma_.size()); }
  /// Exponent q of the defining functional (inf for cube/parallelepiped).
  double exponent() const { return exponent_; }
  const std::vector<double>& sigma() const { return sigma_; }
  /// M for cube/ball/octahedron; throws for the anisotropic kinds.
  double radius() const;

  /// Closed membership test. Rational boundaries (cube, octahedron,
  /// parallelepiped with integral data) are decided exactly; curved ones with
  /// tolerance 1e-12 on the defining functional.
  bool contains(std::span<const double> t) const;
  bool contains_index(const MultiIndex& k, double scale) const;

  /// Largest |t_j| over the body, used to bound enumeration boxes.
  double axis_extent(int j) const;

  ConvexBody scaled(double factor) const;

  bool operator==(const ConvexBody&) const = default;

 private:
  ConvexBody(BodyKind kind, double exponent, std::vector<double> sigma);
  static ConvexBody canonical(double exponent, std::vector<double> sigma);

  BodyKind kind_;
  double exponent_;
  std::vector<double> sigma_;
};

ConvexBody scale_body(const ConvexBody& body, double factor);

struct PiConditionReport {
  bool holds = true;
  int samples_checked = 0;
  std::optional<Point> witness;          // point inside the body
  std::optional<Point> flipped_witness;  // its sign-flipped image outside
};

using MembershipFn = std::function<bool(std::span<const double>)>;

/// Randomized Pi-condition check: draws `samples` points of the body by
/// rejection from the box [-bound, bound]^dim and tests every sign flip.
PiConditionReport pi_condition_check(const MembershipFn& contains, int dim, double bound,
                                     int samples, std::uint64_t seed = 1);
PiConditionReport pi_condition_check(const ConvexBody& body, int samples,
                                     std::uint64_t seed = 1);

/// Lattice exponent set aV ∩ Z^m_+ (optionally all-even), lexicographically sorted.
class ExponentSet {
 public:
  ExponentSet() = default;
  /// Arbitrary set; sorted and deduplicated on construction.
  ExponentSet(int dim, std::vector<MultiIndex> exponents, bool even_only = false,
              std::optional<double> scale = std::nullopt);

  /// Total-degree space P_{n,m}.
  static ExponentSet total_degree(int dim, int degree);
  /// Tensor space with per-axis degree <= n.
  static ExponentSet tensor(int dim, int degree);

  int dim() const { return dim_; }
  std::size_t size() const { return exponents_.size(); }
  bool empty() const { return exponents_.empty(); }
  bool even_only() const { return even_only_; }
  std::optional<double> scale() const { return scale_; }
  const std::vector<MultiIndex>& exponents() const { return exponents_; }
  const MultiIndex& operator[](std::size_t i) const { return exponents_[i]; }

  int total_degree() const;
  int max_axis_degree() const;
  int axis_degree(int j) const;
  /// Position of k, or -1.
  long index_of(const MultiIndex& k) const;
  bool contains(const MultiIndex& k) const { return index_of(k) >= 0; }
  /// Closed under lowering any coordinate (for even sets: lowering by 2).
  bool is_lower_set() const;

  bool operator==(const ExponentSet& other) const {
    return dim_ == other.dim_ && exponents_ == other.exponents_;
  }

 private:
  int dim_ = 0;
  std::vector<MultiIndex> exponents_;
  bool even_only_ = false;
  std::optional<double> scale_;
};

inline constexpr std::size_t kDefaultLatticeCap = 1'000'000;

ExponentSet lattice_points(const ConvexBody& body, double scale, bool even_only = false,
                           std::size_t cap = kDefaultLatticeCap);

}  // namespace nikolskii
