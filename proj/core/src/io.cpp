#include "nikolskii/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>

#include "nikolskii/error.hpp"

namespace nikolskii {

using nlohmann::json;

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

void CsvTable::add_row(std::vector<std::string> row) {
  require(row.size() == header.size(), ErrorCode::kDimensionMismatch,
          "csv: row width differs from header");
  rows.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

CsvTable scan_table(const ScanResult& scan) {
  CsvTable table{{"n", "raw", "scaled", "predicted", "gap"}, {}};
  for (std::size_t i = 0; i < scan.grid.size(); ++i) {
    std::string predicted;
    std::string gap;
    if (scan.predicted) {
      predicted = format_number(*scan.predicted);
      gap = format_number(std::abs(scan.scaled[i] - *scan.predicted) / std::abs(*scan.predicted));
    }
    table.add_row({std::to_string(scan.grid[i]), format_number(scan.raw[i]),
                   format_number(scan.scaled[i]), predicted, gap});
  }
  return table;
}

namespace {

std::string join_index(const MultiIndex& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? ";" : "") + std::to_string(k[i]);
  return s;
}

std::vector<std::string> axis_header(const char* prefix, int m) {
  std::vector<std::string> h;
  for (int j = 1; j <= m; ++j) h.push_back(prefix + std::to_string(j));
  return h;
}

}  // namespace

CsvTable exponent_table(const ExponentSet& exponents) {
  CsvTable t{axis_header("k", exponents.dim()), {}};
  for (const MultiIndex& k : exponents.exponents()) {
    std::vector<std::string> row;
    for (int v : k) row.push_back(std::to_string(v));
    t.add_row(std::move(row));
  }
  return t;
}

CsvTable rule_table(const QuadratureRule& rule) {
  CsvTable t{axis_header("x", rule.dim), {}};
  t.header.push_back("weight");
  for (std::size_t i = 0; i < rule.size(); ++i) {
    std::vector<std::string> row;
    for (double v : rule.node(i)) row.push_back(format_number(v));
    row.push_back(format_number(rule.weights[i]));
    t.add_row(std::move(row));
  }
  return t;
}

CsvTable orthonormal_table(const OrthonormalSystem& system) {
  CsvTable t{{"function"}, {}};
  const ExponentSet& set = system.exponents();
  for (const MultiIndex& k : set.exponents()) t.header.push_back(join_index(k));
  const Eigen::MatrixXd& c = system.coefficients();
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    std::vector<std::string> row{std::to_string(j)};
    for (Eigen::Index i = 0; i < c.rows(); ++i) row.push_back(format_number(c(i, j)));
    t.add_row(std::move(row));
  }
  return t;
}

CsvTable gto_table(const GtoMatrix& g, const ExponentSet& exponents, double drop) {
  CsvTable t{{"target", "source", "coefficient"}, {}};
  const double scale = g.matrix.size() ? std::max(g.matrix.cwiseAbs().maxCoeff(), 1e-300) : 1.0;
  for (Eigen::Index k = 0; k < g.matrix.cols(); ++k) {
    for (Eigen::Index i = 0; i < g.matrix.rows(); ++i) {
      if (std::abs(g.matrix(i, k)) <= drop * scale) continue;
      t.add_row({join_index(exponents[static_cast<std::size_t>(i)]),
                 join_index(exponents[static_cast<std::size_t>(k)]), format_number(g.matrix(i, k))});
    }
  }
  return t;
}

namespace {

// JSON has no NaN or infinity; those become null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

json diagnostics_json(const Diagnostics& d) {
  return {{"method", d.method},
          {"restarts", d.restarts},
          {"iterations", d.iterations},
          {"first_order_residual", number(d.first_order_residual)},
          {"restart_spread", number(d.restart_spread)},
          {"quadrature_degree", d.quadrature_degree},
          {"point_evaluations", d.point_evaluations},
          {"gram_residual", number(d.gram_residual)},
          {"converged", d.converged},
          {"certified", d.certified}};
}

}  // namespace

std::string to_json(const ConvexBody& body, int indent) {
  json params;
  switch (body.kind()) {
    case BodyKind::kCube:
    case BodyKind::kBall:
    case BodyKind::kOctahedron: params = {{"radius", body.radius()}}; break;
    case BodyKind::kLpBall: params = {{"exponent", body.exponent()}, {"sigma", body.sigma()}}; break;
    case BodyKind::kParallelepiped: params = {{"sigma", body.sigma()}}; break;
  }
  return json{{"kind", to_string(body.kind())}, {"m", body.dim()}, {"params", params}}.dump(indent);
}

ConvexBody body_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    const json& params = j.at("params");
    if (kind == "lp_ball") {
      return ConvexBody::lp_ball(params.at("exponent").get<double>(), params.at("sigma").get<std::vector<double>>());
    }
    if (kind == "parallelepiped") return ConvexBody::parallelepiped(params.at("sigma").get<std::vector<double>>());
    const int m = j.at("m").get<int>();
    const double radius = params.at("radius").get<double>();
    if (kind == "cube") return ConvexBody::cube(m, radius);
    if (kind == "ball") return ConvexBody::ball(m, radius);
    if (kind == "octahedron") return ConvexBody::octahedron(m, radius);
    fail(ErrorCode::kInvalidArgument, "body json: unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("body json: ") + e.what());
  }
}

std::string to_json(const Polynomial& poly, int indent) {
  json exps = json::array();
  for (const MultiIndex& k : poly.exponents().exponents()) exps.push_back(k);
  return json{{"basis", poly.basis() == Basis::kChebyshev ? "chebyshev" : "monomial"},
              {"dim", poly.dim()},
              {"exponents", exps},
              {"coeffs", poly.coeffs()}}
      .dump(indent);
}

Polynomial polynomial_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    const std::string basis = j.value("basis", "monomial");
    require(basis == "monomial" || basis == "chebyshev", ErrorCode::kInvalidArgument,
            "polynomial json: unknown basis '" + basis + "'");
    auto exps = j.at("exponents").get<std::vector<MultiIndex>>();
    const auto coeffs = j.at("coeffs").get<std::vector<double>>();
    require(exps.size() == coeffs.size(), ErrorCode::kDimensionMismatch,
            "polynomial json: exponents and coeffs differ in length");
    const int dim = j.contains("dim") ? j.at("dim").get<int>() : (exps.empty() ? 1 : static_cast<int>(exps[0].size()));
    // The set constructor sorts, so carry coefficients along by index.
    const ExponentSet set(dim, exps);
    std::vector<double> aligned(set.size(), 0.0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      aligned[static_cast<std::size_t>(set.index_of(exps[i]))] += coeffs[i];
    }
    return Polynomial(set, aligned, basis == "chebyshev" ? Basis::kChebyshev : Basis::kMonomial);
  } catch (const json::exception& e) {
    fail(ErrorCode::kInvalidArgument, std::string("polynomial json: ") + e.what());
  }
}

std::string to_json(const ContractionReport& r, int indent) {
  return json{{"max_ratio", number(r.max_ratio)},
              {"min_ratio", number(r.min_ratio)},
              {"trials", r.trials},
              {"worst_t", numbers(r.worst_t)}}
      .dump(indent);
}

std::string to_json(const Diagnostics& diagnostics, int indent) {
  return diagnostics_json(diagnostics).dump(indent);
}

std::string to_json(const SharpConstResult& result, int indent) {
  const json j = {{"value", number(result.value)},
                  {"maximizer", numbers(result.maximizer)},
                  {"extremizer", json::parse(to_json(result.extremizer, -1))},
                  {"diagnostics", diagnostics_json(result.diagnostics)}};
  return j.dump(indent);
}

std::string to_json(const ScanResult& scan, int indent) {
  json certified = json::array();
  for (bool c : scan.certified) certified.push_back(c);
  json j = {{"kind", to_string(scan.kind)},
            {"p", scan.p},
            {"kappa", scan.kappa},
            {"grid", scan.grid},
            {"raw", numbers(scan.raw)},
            {"scaled", numbers(scan.scaled)},
            {"certified", certified},
            {"extrapolated", number(scan.extrapolated)},
            {"predicted", scan.predicted ? number(*scan.predicted) : json(nullptr)},
            {"gap", number(scan.gap)},
            {"head_spread", number(scan.head_spread)},
            {"tail_spread", number(scan.tail_spread)},
            {"within_bracket", scan.within_bracket},
            {"envelope_ok", scan.envelope_ok ? json(*scan.envelope_ok) : json(nullptr)},
            {"low_confidence", scan.low_confidence}};
  return j.dump(indent);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), ErrorCode::kIo, "cannot open " + path + " for writing");
  out << content;
  out.flush();
  require(out.good(), ErrorCode::kIo, "failed writing " + path);
}

}  // namespace nikolskii
