#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "internal.hpp"
#include "nikolskii/asymptotics.hpp"
#include "nikolskii/gto.hpp"
#include "nikolskii/reductions.hpp"
#include "nikolskii/sharpconst.hpp"

namespace nikolskii::cli {

namespace {

using Records = std::vector<CheckRecord>;

std::string fmt(const char* pattern, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

void add(Records& out, const std::string& suite, std::string name, double value, double tol) {
  out.push_back({suite, std::move(name), value, tol, std::isfinite(value) && value <= tol});
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

Records gto_eigen(const RunConfig& c) {
  const double tol = c.tolerances.eigen;
  Records r;
  const std::string s = "gto-eigen";
  for (double l : {0.0, 0.5, 1.0, 2.5}) {
    add(r, s, fmt("interval lambda=%g", l), eigen_residual_interval(l, 6, 20), tol);
  }
  add(r, s, "cube lambda=(0,0.5)", eigen_residual_cube({0.0, 0.5}, 6, 20), tol);
  add(r, s, "cube lambda=(0.5,1,2.5)", eigen_residual_cube({0.5, 1.0, 2.5}, 6, 20), tol);
  for (int m : {2, 3}) add(r, s, fmt("ball chebyshev m=%d", m), eigen_residual_ball_chebyshev(m, 6, 20), tol);
  for (auto [m, l] : {std::pair{2, 0.5}, std::pair{2, 1.0}, std::pair{3, 1.5}}) {
    add(r, s, fmt("ball gegenbauer m=%d lambda=%g", m, l),
        eigen_residual_ball_gegenbauer(m, l, 6, 20, 3, c.seed), tol);
  }
  return r;
}

Records gto_contraction(const RunConfig& c) {
  const std::vector<std::pair<GtoSpec, ExponentSet>> cases = {
      {GtoSpec::interval(0.0), ExponentSet::total_degree(1, 6)},
      {GtoSpec::interval(1.0), ExponentSet::total_degree(1, 6)},
      {GtoSpec::cube({0.0, 1.0}), ExponentSet::total_degree(2, 4)},
      {GtoSpec::ball_chebyshev(2), ExponentSet::total_degree(2, 4)},
      {GtoSpec::ball_gegenbauer(2, 1.0), ExponentSet::total_degree(2, 4)},
      {GtoSpec::ball_chebyshev(3), ExponentSet::total_degree(3, 3)},
  };
  Records r;
  for (const auto& [spec, set] : cases) {
    for (double p : {1.0, 2.0, 4.0}) {
      const ContractionReport rep = contraction_check(spec, set, p, c.trials, c.seed);
      add(r, "gto-contraction", fmt("%s m=%d p=%g", to_string(spec.kind()).c_str(), spec.dim(), p),
          rep.max_ratio - 1.0, c.tolerances.contraction);
    }
  }
  return r;
}

Records exact_formulas(const RunConfig& c) {
  Records r;
  const std::string s = "exact-formulas";
  for (double l : {0.0, 0.5, 1.0, 2.5}) {
    double worst = 0.0;
    for (int n = 0; n <= 30; ++n) {
      const double numeric = sharp_constant_p2_at_point(ExponentSet::total_degree(1, n),
                                                        WeightSpec::gegenbauer_interval(l), Point{1.0})
                                 .value;
      worst = std::max(worst, rel(numeric, exact_interval_p2(n, l)));
    }
    add(r, s, fmt("interval kernel n<=30 lambda=%g", l), worst, c.tolerances.exact);
  }
  double anchor = 0.0;
  for (int n = 0; n <= 30; ++n) {
    anchor = std::max(anchor, rel(exact_interval_p2(n, 0.5), (n + 1) / std::sqrt(2.0)));
    anchor = std::max(anchor, rel(exact_interval_p2(n, 0.0), std::sqrt((2.0 * n + 1) / std::numbers::pi)));
  }
  add(r, s, "interval anchors", anchor, c.tolerances.exact);
  for (int m : {2, 3}) {
    for (double l : {0.0, 0.5}) {
      double worst = 0.0;
      for (int n = 0; n <= 4; ++n) {
        const auto sup = SharpConstantProblem(ExponentSet::total_degree(m, n), WeightSpec::ball_radial(m, l), 2.0).sup();
        worst = std::max(worst, rel(sup.value, exact_ball_p2(n, m, l)));
      }
      add(r, s, fmt("ball sup m=%d lambda=%g n<=4", m, l), worst, c.tolerances.ball_exact);
    }
  }
  double cube = 0.0;
  for (int a = 0; a <= 4; ++a) {
    const auto sup =
        SharpConstantProblem(ExponentSet::tensor(2, a), WeightSpec::gegenbauer_cube({0.0, 0.5}), 2.0).sup();
    cube = std::max(cube, rel(sup.value, exact_interval_p2(a, 0.0) * exact_interval_p2(a, 0.5)));
  }
  add(r, s, "cube sup tensor product m=2 a<=4", cube, c.tolerances.ball_exact);
  return r;
}

Records reductions(const RunConfig& c) {
  Records r;
  const std::string s = "reductions";
  ReductionOptions opts;
  opts.solver.restarts = c.restarts;
  opts.solver.seed = c.seed;
  for (int m : {1, 2}) {
    for (double l : {0.0, 0.5}) {
      double worst = 0.0;
      for (int a = 1; a <= 3; ++a) {
        const auto rep = cube_reduction_check(ConvexBody::cube(m, 1.0), a, std::vector<double>(m, l), 2.0, opts);
        worst = std::max({worst, rep.residual, rep.residual_full});
      }
      add(r, s, fmt("cube p=2 m=%d lambda=%g a<=3", m, l), worst, c.tolerances.reduction_p2);
    }
  }
  for (double l : {0.0, 0.5}) {
    double worst = 0.0;
    for (int a = 1; a <= 3; ++a) {
      const auto rep = cube_reduction_check(ConvexBody::cube(1, 1.0), a, {l}, 4.0, opts);
      worst = std::max(worst, rep.residual);
    }
    add(r, s, fmt("cube p=4 m=1 lambda=%g a<=3", l), worst, c.tolerances.reduction);
  }
  ReductionOptions p1 = opts;
  p1.rule_degree_per_degree = std::max(c.rule_multiplier, 100);
  double worst_p1 = 0.0;
  for (int a = 1; a <= 3; ++a) {
    worst_p1 = std::max(worst_p1, cube_reduction_check(ConvexBody::cube(1, 1.0), a, {0.0}, 1.0, p1).residual);
  }
  add(r, s, "cube p=1 m=1 lambda=0 a<=3", worst_p1, c.tolerances.reduction);

  for (int m : {2, 3}) {
    double closed = 0.0;
    double numeric = 0.0;
    for (int n = 0; n <= 6; ++n) {
      const auto rep = ball_reduction_check(n, m, 0.5, 2.0);
      closed = std::max(closed, rep.closed_form_residual);
      numeric = std::max({numeric, rep.residual, rep.axial_residual});
    }
    add(r, s, fmt("ball p=2 m=%d closed forms n<=6", m), closed, 1e-12);
    add(r, s, fmt("ball p=2 m=%d numeric n<=6", m), numeric, c.tolerances.reduction_p2);
  }
  BallReductionOptions b4;
  b4.solver = opts.solver;
  double worst4 = 0.0;
  for (int n = 1; n <= 4; ++n) worst4 = std::max(worst4, ball_reduction_check(n, 2, 0.0, 4.0, b4).residual);
  add(r, s, "ball p=4 m=2 lambda=0 n<=4", worst4, c.tolerances.reduction);
  return r;
}

Records chain(const RunConfig& c) {
  Records r;
  for (auto [m, l] : {std::pair{1, 0.0}, std::pair{1, 0.5}, std::pair{2, 0.0}, std::pair{3, 0.5}}) {
    const ChainReport rep = chain_check(m, l);
    add(r, "chain", fmt("m=%d lambda=%g analytic", m, l), rep.analytic_residual, c.tolerances.chain);
    add(r, "chain", fmt("m=%d lambda=%g envelope 3(2l+m)/n", m, l), rep.envelope_ratio, 1.0);
  }
  return r;
}

Records substitution(const RunConfig& c) {
  struct Case {
    double tau;
    std::vector<double> alpha;
    std::vector<double> beta;
  };
  const std::vector<Case> cases = {{0.9, {1.0, 2.0}, {-0.5, 3.0}},
                                   {0.5, {0.0}, {0.0}},
                                   {0.3, {0.5, 0.0, 3.0}, {0.2, -0.5, 1.0}},
                                   {0.99, {0.0, 0.0}, {-0.5, -0.5}}};
  Records r;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& k = cases[i];
    const auto rep = substitution_gap_check(k.tau, k.alpha, k.beta, 100'000, c.seed + i);
    add(r, "substitution", fmt("set %zu tau=%g m=%zu", i + 1, k.tau, k.alpha.size()), rep.max_violation,
        c.tolerances.substitution);
  }
  return r;
}

double vertex_distance(const Point& x) {
  double d = 0.0;
  for (double v : x) d = std::max(d, std::abs(1.0 - std::abs(v)));
  return d;
}

double sphere_distance(const Point& x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return std::abs(std::sqrt(r2) - 1.0);
}

Records extremal_location(const RunConfig& c) {
  Records r;
  const std::string s = "extremal-location";
  SolverOptions o;
  o.restarts = c.restarts;
  o.seed = c.seed;
  for (double p : {1.0, 2.0, 4.0}) {
    for (double l : {0.0, 0.5}) {
      double gap = 0.0;
      double where = 0.0;
      for (int n = 1; n <= 6; ++n) {
        const SharpConstantProblem problem(ExponentSet::total_degree(1, n), WeightSpec::gegenbauer_interval(l), p, o);
        const auto sup = problem.sup();
        gap = std::max(gap, rel(sup.value, problem.point_value(Point{1.0}, c.restarts)));
        where = std::max(where, vertex_distance(sup.maximizer));
      }
      add(r, s, fmt("interval p=%g lambda=%g sup vs endpoint", p, l), gap, c.tolerances.endpoint);
      add(r, s, fmt("interval p=%g lambda=%g maximizer at +-1", p, l), where, c.tolerances.location);
    }
  }
  for (double p : {2.0, 4.0}) {
    const auto cube = SharpConstantProblem(ExponentSet::tensor(2, 2), WeightSpec::gegenbauer_cube({0.0, 0.5}), p, o).sup();
    add(r, s, fmt("cube m=2 a=2 p=%g maximizer at a vertex", p), vertex_distance(cube.maximizer),
        c.tolerances.location);
    const auto ball = SharpConstantProblem(ExponentSet::total_degree(2, 3), WeightSpec::ball_radial(2, 0.0), p, o).sup();
    add(r, s, fmt("ball m=2 n=3 p=%g maximizer on the sphere", p), sphere_distance(ball.maximizer),
        c.tolerances.location);
  }
  return r;
}

const std::map<std::string, std::function<Records(const RunConfig&)>>& registry() {
  static const std::map<std::string, std::function<Records(const RunConfig&)>> suites = {
      {"gto-eigen", gto_eigen},       {"gto-contraction", gto_contraction},
      {"exact-formulas", exact_formulas}, {"reductions", reductions},
      {"chain", chain},               {"substitution", substitution},
      {"extremal-location", extremal_location}};
  return suites;
}

}  // namespace

std::vector<CheckRecord> run_suite(const std::string& suite, const RunConfig& config) {
  if (suite != "all") return registry().at(suite)(config);
  Records all;
  for (const char* name : {"gto-eigen", "gto-contraction", "exact-formulas", "reductions", "chain", "substitution",
                           "extremal-location"}) {
    Records part = registry().at(name)(config);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

}  // namespace nikolskii::cli
