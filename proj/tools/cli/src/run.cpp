#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <ostream>

#include "internal.hpp"
#include "nikolskii/asymptotics.hpp"
#include "nikolskii/error.hpp"
#include "nikolskii/gto.hpp"
#include "nikolskii/io.hpp"
#include "nikolskii/quadrature.hpp"
#include "nikolskii/sharpconst.hpp"

namespace nikolskii::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + format_number(v[i]);
  return s;
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
  } else {
    write_file(c.output, text);
  }
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

bool even_integer(double p) { return p == std::floor(p) && static_cast<long>(p) % 2 == 0; }

SolverOptions solver_options(const RunConfig& c, int degree) {
  SolverOptions o;
  o.restarts = c.restarts;
  o.seed = c.seed;
  if (c.rule_multiplier > 0 && !even_integer(c.p)) {
    o.rule_degree = std::max(norm_rule_degree(degree, c.p), c.rule_multiplier * degree);
  }
  return o;
}

// Gegenbauer parameters named by --weight, broadcast to m coordinates.
std::vector<double> weight_lambdas(const RunConfig& c) {
  std::vector<double> l;
  if (c.weight == "chebyshev") {
    l = {0.0};
  } else if (c.weight == "legendre") {
    l = {0.5};
  } else {
    std::string rest = c.weight.substr(c.weight.find(':') + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const std::size_t comma = std::min(rest.find(',', pos), rest.size());
      const std::string item = rest.substr(pos, comma - pos);
      try {
        std::size_t used = 0;
        l.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("cannot read Gegenbauer parameter '" + item + "' in --weight");
      }
      pos = comma + 1;
    }
  }
  for (double v : l) {
    if (!(v >= 0.0)) throw UsageError("Gegenbauer parameters in --weight must be >= 0");
  }
  if (l.size() == 1) l.assign(static_cast<std::size_t>(c.m), l[0]);
  if (static_cast<int>(l.size()) != c.m) throw UsageError("--weight needs one parameter or one per coordinate");
  return l;
}

WeightSpec make_weight(const RunConfig& c) {
  if (c.weight == "product") return WeightSpec::coordinate_product(c.alpha, c.beta);
  const std::vector<double> l = weight_lambdas(c);
  if (c.domain == "interval") return WeightSpec::gegenbauer_interval(l[0]);
  if (c.domain == "ball") {
    if (std::any_of(l.begin(), l.end(), [&](double v) { return v != l[0]; })) {
      throw UsageError("ball weights take a single Gegenbauer parameter");
    }
    return WeightSpec::ball_radial(c.m, l[0]);
  }
  return WeightSpec::gegenbauer_cube(l);
}

ExponentSet make_space(const RunConfig& c) {
  if (c.domain == "cube") return lattice_points(make_body(c.body, c.m), c.n);
  return ExponentSet::total_degree(c.m, c.n);
}

int space_degree(const RunConfig& c, const ExponentSet& set) {
  return c.domain == "cube" ? set.max_axis_degree() : set.total_degree();
}

std::optional<double> closed_form(const RunConfig& c, const Point& x) {
  if (c.p != 2.0 || c.weight == "product") return std::nullopt;
  const std::vector<double> l = weight_lambdas(c);
  if (c.domain == "interval") {
    if (std::abs(x[0]) != 1.0) return std::nullopt;
    return exact_interval_p2(c.n, l[0]);
  }
  if (c.domain == "ball") {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    if (std::abs(r2 - 1.0) > 1e-12) return std::nullopt;
    return exact_ball_p2(c.n, c.m, l[0]);
  }
  if (c.body != "cube") return std::nullopt;
  double value = 1.0;
  for (int j = 0; j < c.m; ++j) {
    if (std::abs(x[j]) != 1.0) return std::nullopt;
    value *= exact_interval_p2(c.n, l[j]);
  }
  return value;
}

int run_constant(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const WeightSpec weight = make_weight(c);
  const ExponentSet set = make_space(c);
  if (set.empty()) throw UsageError("the polynomial space is empty");
  const SharpConstantProblem problem(set, weight, c.p, solver_options(c, space_degree(c, set)));
  const SharpConstResult r = c.at.empty() ? problem.sup() : problem.at_point(c.at);
  const std::optional<double> exact = closed_form(c, r.maximizer);
  const double rel = exact ? std::abs(r.value - *exact) / *exact : std::nan("");
  if (c.format == Format::kJson) {
    json j = {{"domain", c.domain},
              {"weight", c.weight},
              {"m", c.m},
              {"n", c.n},
              {"p", c.p},
              {"mode", c.at.empty() ? "sup" : "point"},
              {"dimension", set.size()},
              {"result", json::parse(to_json(r))},
              {"exact", exact ? json(*exact) : json(nullptr)},
              {"rel_error", number(rel)}};
    emit(c, out, j.dump(2) + "\n");
  } else {
    CsvTable t{{"domain", "m", "n", "p", "point", "numeric", "exact", "rel_error", "method", "certified"}, {}};
    t.add_row({c.domain, std::to_string(c.m), std::to_string(c.n), format_number(c.p), join(r.maximizer),
               format_number(r.value), exact ? format_number(*exact) : "", exact ? format_number(rel) : "",
               r.diagnostics.method, r.diagnostics.certified ? "true" : "false"});
    emit(c, out, t.str());
  }
  if (!r.diagnostics.certified) {
    err << error_record("runtime", "not_certified",
                        "optimizer restarts disagree or Newton stalled; value is a lower bound")
        << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

GtoSpec make_gto(const RunConfig& c) {
  const int inner = c.inner_degree > 0 ? c.inner_degree : std::max(c.n, 1);
  if (c.gto_kind == "interval") return GtoSpec::interval(c.lambda[0], inner);
  if (c.gto_kind == "cube") return GtoSpec::cube(c.lambda, inner);
  if (c.gto_kind == "ball-chebyshev") return GtoSpec::ball_chebyshev(c.m, inner);
  return GtoSpec::ball_gegenbauer(c.m, c.lambda[0], inner);
}

int run_gto(const RunConfig& c, std::ostream& out) {
  const GtoSpec spec = make_gto(c);
  const ExponentSet set = ExponentSet::total_degree(spec.dim(), c.n);
  const GtoMatrix g = gto_matrix(spec, set, c.t);
  const double scale = std::max(g.matrix.cwiseAbs().maxCoeff(), 1e-300);
  if (c.format == Format::kJson) {
    json exps = json::array();
    for (std::size_t i = 0; i < set.size(); ++i) exps.push_back(set[i]);
    json rows = json::array();
    for (Eigen::Index i = 0; i < g.matrix.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < g.matrix.cols(); ++k) {
        row.push_back(std::abs(g.matrix(i, k)) > 1e-13 * scale ? g.matrix(i, k) : 0.0);
      }
      rows.push_back(row);
    }
    const json j = {{"kind", to_string(spec.kind())}, {"t", c.t},       {"exponents", exps},
                    {"matrix", rows},                 {"basis", "monomial"}, {"residual", g.residual}};
    emit(c, out, j.dump(2) + "\n");
  } else {
    emit(c, out, gto_table(g, set).str());
  }
  return kExitOk;
}

int run_scan(const RunConfig& c, std::ostream& out, std::ostream& err) {
  ScanOptions o;
  o.solver.restarts = c.restarts;
  o.solver.seed = c.seed;
  o.rule_degree_per_degree = c.rule_multiplier;
  const double lambda0 = c.lambda.empty() ? 0.0 : c.lambda[0];
  ScanResult r;
  if (c.theorem == "ball") {
    r = ball_limit_scan(lambda0, c.p, c.m, c.n_max, o);
  } else if (c.theorem == "cube") {
    std::vector<double> l = c.lambda;
    if (l.size() <= 1) l.assign(static_cast<std::size_t>(c.m), lambda0);
    r = cube_limit_scan(make_body(c.body, c.m), l, c.p, c.n_max, o);
  } else {
    r = point_limit_scan(make_body(c.body, c.m), c.alpha, c.beta, c.p, c.n_max, o);
  }
  emit(c, out, c.format == Format::kJson ? to_json(r) + "\n" : scan_table(r).str());
  if (r.low_confidence) {
    err << json{{"warning", {{"code", "low_confidence"}, {"message", "extrapolated limit is low-confidence"}}}}.dump()
        << '\n';
  }
  return kExitOk;
}

int run_table(const RunConfig& c, std::ostream& out) {
  const double lambda = c.lambda.empty() ? 0.0 : c.lambda[0];
  CsvTable t{{"n", "numeric", "exact", "rel_error"}, {}};
  json rows = json::array();
  for (int n = 0; n <= c.n_max; ++n) {
    double numeric = 0.0;
    double exact = 0.0;
    if (c.table == "interval") {
      numeric = sharp_constant_p2_at_point(ExponentSet::total_degree(1, n), WeightSpec::gegenbauer_interval(lambda),
                                           Point{1.0})
                    .value;
      exact = exact_interval_p2(n, lambda);
    } else {
      numeric = SharpConstantProblem(ExponentSet::total_degree(c.m, n), WeightSpec::ball_radial(c.m, lambda), 2.0)
                    .sup()
                    .value;
      exact = exact_ball_p2(n, c.m, lambda);
    }
    const double rel = std::abs(numeric - exact) / exact;
    t.add_row({std::to_string(n), format_number(numeric), format_number(exact), format_number(rel)});
    rows.push_back({{"n", n}, {"numeric", numeric}, {"exact", exact}, {"rel_error", rel}});
  }
  emit(c, out, c.format == Format::kJson ? rows.dump(2) + "\n" : t.str());
  return kExitOk;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const std::vector<CheckRecord> records = run_suite(c.suite, c);
  bool all = true;
  CsvTable t{{"suite", "check", "value", "tolerance", "status"}, {}};
  json arr = json::array();
  for (const CheckRecord& r : records) {
    all = all && r.pass;
    t.add_row({r.suite, r.name, format_number(r.value), format_number(r.tolerance), r.pass ? "PASS" : "FAIL"});
    arr.push_back({{"suite", r.suite},
                   {"check", r.name},
                   {"value", number(r.value)},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass}});
  }
  if (c.format == Format::kJson) {
    emit(c, out, json{{"suite", c.suite}, {"pass", all}, {"checks", arr}}.dump(2) + "\n");
  } else {
    emit(c, out, t.str());
  }
  return all ? kExitOk : kExitFailure;
}

}  // namespace

ConvexBody make_body(const std::string& name, int m) {
  if (name == "cube") return ConvexBody::cube(m, 1.0);
  if (name == "ball") return ConvexBody::ball(m, 1.0);
  if (name == "octahedron") return ConvexBody::octahedron(m, 1.0);
  if (name.rfind("lp:", 0) == 0) {
    double q = 0.0;
    try {
      q = std::stod(name.substr(3));
    } catch (const std::exception&) {
      throw UsageError("cannot read the exponent in --body " + name);
    }
    return ConvexBody::lp_ball(q, std::vector<double>(static_cast<std::size_t>(m), 1.0));
  }
  throw UsageError("unknown body '" + name + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::kConstant: return run_constant(config, out, err);
    case Command::kVerify: return run_verify(config, out);
    case Command::kGto: return run_gto(config, out);
    case Command::kScan: return run_scan(config, out, err);
    case Command::kTable: return run_table(config, out);
  }
  return kExitFailure;
}

}  // namespace nikolskii::cli
