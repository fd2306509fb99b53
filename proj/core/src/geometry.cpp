#include "nikolskii/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "nikolskii/error.hpp"

namespace nikolskii {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundaryTol = 1e-12;

bool all_equal(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

std::string to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::kCube: return "cube";
    case BodyKind::kBall: return "ball";
    case BodyKind::kOctahedron: return "octahedron";
    case BodyKind::kLpBall: return "lp_ball";
    case BodyKind::kParallelepiped: return "parallelepiped";
  }
  return "unknown";
}

ConvexBody::ConvexBody(BodyKind kind, double exponent, std::vector<double> sigma)
    : kind_(kind), exponent_(exponent), sigma_(std::move(sigma)) {}

ConvexBody ConvexBody::canonical(double exponent, std::vector<double> sigma) {
  require(!sigma.empty(), ErrorCode::kInvalidArgument, "convex body: dimension must be >= 1");
  require(exponent >= 1.0, ErrorCode::kInvalidArgument, "convex body: exponent must be >= 1");
  if (exponent == kInf) {
    for (double& s : sigma) s = std::abs(s);
    require(std::any_of(sigma.begin(), sigma.end(), [](double s) { return s > 0.0; }),
            ErrorCode::kInvalidArgument, "parallelepiped: sigma must not be all zero");
    if (all_equal(sigma)) return ConvexBody(BodyKind::kCube, kInf, std::move(sigma));
    return ConvexBody(BodyKind::kParallelepiped, kInf, std::move(sigma));
  }
  require(std::all_of(sigma.begin(), sigma.end(), [](double s) { return s > 0.0; }),
          ErrorCode::kInvalidArgument, "lp_ball: sigma must be positive");
  if (all_equal(sigma)) {
    if (exponent == 1.0) return ConvexBody(BodyKind::kOctahedron, 1.0, std::move(sigma));
    if (exponent == 2.0) return ConvexBody(BodyKind::kBall, 2.0, std::move(sigma));
  }
  return ConvexBody(BodyKind::kLpBall, exponent, std::move(sigma));
}

ConvexBody ConvexBody::cube(int dim, double half_side) {
  require(dim >= 1 && half_side > 0.0, ErrorCode::kInvalidArgument, "cube: need dim >= 1, M > 0");
  return canonical(kInf, std::vector<double>(dim, half_side));
}

ConvexBody ConvexBody::ball(int dim, double radius) {
  require(dim >= 1 && radius > 0.0, ErrorCode::kInvalidArgument, "ball: need dim >= 1, M > 0");
  return canonical(2.0, std::vector<double>(dim, radius));
}

ConvexBody ConvexBody::octahedron(int dim, double radius) {
  require(dim >= 1 && radius > 0.0, ErrorCode::kInvalidArgument,
          "octahedron: need dim >= 1, M > 0");
  return canonical(1.0, std::vector<double>(dim, radius));
}

ConvexBody ConvexBody::lp_ball(double exponent, std::vector<double> sigma) {
  return canonical(exponent, std::move(sigma));
}

ConvexBody ConvexBody::parallelepiped(std::vector<double> sigma) {
  return canonical(kInf, std::move(sigma));
}

double ConvexBody::radius() const {
  require(kind_ == BodyKind::kCube || kind_ == BodyKind::kBall || kind_ == BodyKind::kOctahedron,
          ErrorCode::kInvalidArgument, "radius() is defined for cube, ball and octahedron only");
  return sigma_.front();
}

bool ConvexBody::contains(std::span<const double> t) const {
  require(static_cast<int>(t.size()) == dim(), ErrorCode::kDimensionMismatch,
          "membership: point dimension does not match body");
  if (exponent_ == kInf) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (std::abs(t[j]) > sigma_[j]) return false;
    }
    return true;
  }
  if (exponent_ == 1.0) {
    double sum = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) sum += std::abs(t[j]) / sigma_[j];
    return sum <= 1.0 + kBoundaryTol;
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) sum += std::pow(std::abs(t[j]) / sigma_[j], exponent_);
  return sum <= 1.0 + kBoundaryTol;
}

bool ConvexBody::contains_index(const MultiIndex& k, double scale) const {
  require(static_cast<int>(k.size()) == dim(), ErrorCode::kDimensionMismatch,
          "membership: multi-index dimension does not match body");
  if (scale == 0.0) return std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
  if (exponent_ == kInf) {
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] > scale * sigma_[j] * (1.0 + kBoundaryTol)) return false;
    }
    return true;
  }
  Point t(k.begin(), k.end());
  for (double& v : t) v /= scale;
  return contains(t);
}

double ConvexBody::axis_extent(int j) const { return sigma_.at(j); }

ConvexBody ConvexBody::scaled(double factor) const {
  require(factor > 0.0, ErrorCode::kInvalidArgument, "scale_body: factor must be positive");
  std::vector<double> sigma = sigma_;
  for (double& s : sigma) s *= factor;
  return canonical(exponent_, std::move(sigma));
}

ConvexBody scale_body(const ConvexBody& body, double factor) { return body.scaled(factor); }

PiConditionReport pi_condition_check(const MembershipFn& contains, int dim, double bound,
                                     int samples, std::uint64_t seed) {
  require(samples >= 1, ErrorCode::kInvalidArgument, "pi_condition_check: samples must be >= 1");
  require(dim >= 1 && dim <= 20, ErrorCode::kInvalidArgument, "pi_condition_check: bad dim");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-bound, bound);
  PiConditionReport report;
  Point t(dim);
  Point flipped(dim);
  const long max_draws = 1000L * samples + 10000L;
  for (long draw = 0; draw < max_draws && report.samples_checked < samples; ++draw) {
    for (double& v : t) v = coord(rng);
    if (!contains(t)) continue;
    ++report.samples_checked;
    for (unsigned mask = 1; mask < (1u << dim); ++mask) {
      for (int j = 0; j < dim; ++j) flipped[j] = (mask >> j & 1u) ? -t[j] : t[j];
      if (!contains(flipped)) {
        report.holds = false;
        report.witness = t;
        report.flipped_witness = flipped;
        return report;
      }
    }
  }
  return report;
}

PiConditionReport pi_condition_check(const ConvexBody& body, int samples, std::uint64_t seed) {
  double bound = 0.0;
  for (int j = 0; j < body.dim(); ++j) bound = std::max(bound, body.axis_extent(j));
  return pi_condition_check([&](std::span<const double> t) { return body.contains(t); },
                            body.dim(), bound, samples, seed);
}

ExponentSet::ExponentSet(int dim, std::vector<MultiIndex> exponents, bool even_only,
                         std::optional<double> scale)
    : dim_(dim), exponents_(std::move(exponents)), even_only_(even_only), scale_(scale) {
  require(dim >= 1, ErrorCode::kInvalidArgument, "exponent set: dimension must be >= 1");
  for (const MultiIndex& k : exponents_) {
    require(static_cast<int>(k.size()) == dim, ErrorCode::kDimensionMismatch,
            "exponent set: multi-index has wrong dimension");
    for (int v : k) {
      require(v >= 0, ErrorCode::kInvalidArgument, "exponent set: negative exponent");
      if (even_only) require(v % 2 == 0, ErrorCode::kInvalidArgument, "exponent set: odd exponent");
    }
  }
  std::sort(exponents_.begin(), exponents_.end());
  exponents_.erase(std::unique(exponents_.begin(), exponents_.end()), exponents_.end());
}

ExponentSet ExponentSet::total_degree(int dim, int degree) {
  return lattice_points(ConvexBody::octahedron(dim, 1.0), degree);
}

ExponentSet ExponentSet::tensor(int dim, int degree) {
  return lattice_points(ConvexBody::cube(dim, 1.0), degree);
}

int ExponentSet::total_degree() const {
  int best = 0;
  for (const MultiIndex& k : exponents_) {
    int sum = 0;
    for (int v : k) sum += v;
    best = std::max(best, sum);
  }
  return best;
}

int ExponentSet::axis_degree(int j) const {
  int best = 0;
  for (const MultiIndex& k : exponents_) best = std::max(best, k[j]);
  return best;
}

int ExponentSet::max_axis_degree() const {
  int best = 0;
  for (int j = 0; j < dim_; ++j) best = std::max(best, axis_degree(j));
  return best;
}

long ExponentSet::index_of(const MultiIndex& k) const {
  auto it = std::lower_bound(exponents_.begin(), exponents_.end(), k);
  if (it == exponents_.end() || *it != k) return -1;
  return static_cast<long>(it - exponents_.begin());
}

bool ExponentSet::is_lower_set() const {
  const int step = even_only_ ? 2 : 1;
  for (const MultiIndex& k : exponents_) {
    for (int j = 0; j < dim_; ++j) {
      if (k[j] < step) continue;
      MultiIndex lower = k;
      lower[j] -= step;
      if (!contains(lower)) return false;
    }
  }
  return true;
}

ExponentSet lattice_points(const ConvexBody& body, double scale, bool even_only,
                           std::size_t cap) {
  require(scale >= 0.0, ErrorCode::kInvalidArgument, "lattice_points: scale must be >= 0");
  const int m = body.dim();
  const int step = even_only ? 2 : 1;
  std::vector<int> upper(m);
  double box_count = 1.0;
  for (int j = 0; j < m; ++j) {
    upper[j] = static_cast<int>(std::floor(scale * body.axis_extent(j) * (1.0 + 1e-12) + 1e-9));
    box_count *= upper[j] / step + 1;
  }
  require(box_count <= 64.0 * static_cast<double>(cap), ErrorCode::kOverflow,
          "lattice_points: enumeration box exceeds the configured cap");

  std::vector<MultiIndex> points;
  MultiIndex k(m, 0);
  // Depth-first over coordinates; by sign symmetry and convexity the body is
  // monotone under coordinatewise shrinking, so a failing coordinate value
  // bounds all larger ones.
  auto recurse = [&](auto&& self, int j) -> void {
    if (j == m) {
      if (body.contains_index(k, scale)) {
        require(points.size() < cap, ErrorCode::kOverflow,
                "lattice_points: exponent count exceeds the configured cap");
        points.push_back(k);
      }
      return;
    }
    for (int v = 0; v <= upper[j]; v += step) {
      k[j] = v;
      MultiIndex probe = k;
      std::fill(probe.begin() + j + 1, probe.end(), 0);
      if (!body.contains_index(probe, scale)) break;
      self(self, j + 1);
    }
    k[j] = 0;
  };
  recurse(recurse, 0);
  return ExponentSet(m, std::move(points), even_only, scale);
}

}  // namespace nikolskii
