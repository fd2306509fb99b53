#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "nikolskii/cli/run.hpp"
#include "nikolskii/error.hpp"

namespace nikolskii::cli {

namespace {

void add_space_options(CLI::App& sub, RunConfig& c) {
  sub.add_option("--domain", c.domain, "interval | cube | ball")->capture_default_str();
  sub.add_option("--weight", c.weight, "gegenbauer:l[,l...] | chebyshev | legendre | product")
      ->capture_default_str();
  sub.add_option("--body", c.body, "cube | ball | octahedron | lp:q (Newton body for --domain cube)")
      ->capture_default_str();
  sub.add_option("--m", c.m, "dimension")->capture_default_str();
  sub.add_option("--p", c.p, "norm exponent, p >= 1")->capture_default_str();
  sub.add_option("--alpha", c.alpha, "|t_j|^alpha_j exponents (product weight)")->delimiter(',');
  sub.add_option("--beta", c.beta, "(1 - t_j^2)^beta_j exponents (product weight)")->delimiter(',');
}

void add_solver_options(CLI::App& sub, RunConfig& c) {
  sub.add_option("--restarts", c.restarts, "optimizer starts for p != 2")->capture_default_str();
  sub.add_option("--rule-mult", c.rule_multiplier,
                 "norm rule degree at least this multiple of the degree (p != 2)")
      ->capture_default_str();
  sub.add_option("--seed", c.seed, "seed for every random choice")->capture_default_str();
}

void add_output_options(CLI::App& sub, RunConfig& c) {
  sub.add_option("--format", c.format, "csv | json")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::kCsv},
                                                                       {"json", Format::kJson}}));
  sub.add_option("--output,-o", c.output, "write to this file instead of stdout");
}

double parse_tolerance(const char* name, const char* text) {
  char* end = nullptr;
  const double v = std::strtod(text, &end);
  if (end == text || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(std::string(name) + " must be a positive number, got '" + text + "'");
  }
  return v;
}

bool is_one_of(const std::string& s, std::initializer_list<const char*> options) {
  for (const char* o : options) {
    if (s == o) return true;
  }
  return false;
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig c;
  CLI::App app{"Sharp Nikolskii constants on the cube and the ball"};
  app.require_subcommand(1);

  auto* constant = app.add_subcommand("constant", "sharp point or sup constant of one space");
  add_space_options(*constant, c);
  constant->add_option("--n", c.n, "degree (interval, ball) or body scale a (cube)")->capture_default_str();
  constant->add_option("--at", c.at, "evaluation point; omit for the sup over the domain")->delimiter(',');
  add_solver_options(*constant, c);
  add_output_options(*constant, c);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("--suite", c.suite,
                   "gto-eigen | gto-contraction | exact-formulas | reductions | chain | substitution | "
                   "extremal-location | all")
      ->capture_default_str();
  verify->add_option("--trials", c.trials, "random trials per randomized check")->capture_default_str();
  add_solver_options(*verify, c);
  add_output_options(*verify, c);

  auto* gto = app.add_subcommand("gto", "matrix of a translation operator on a polynomial space");
  gto->add_option("--kind", c.gto_kind, "interval | cube | ball-chebyshev | ball-gegenbauer")
      ->capture_default_str();
  gto->add_option("--m", c.m, "dimension")->capture_default_str();
  gto->add_option("--lambda", c.lambda, "operator parameter(s)")->delimiter(',');
  gto->add_option("--n", c.n, "total degree of the space")->capture_default_str();
  gto->add_option("--t", c.t, "translation parameter(s)")->delimiter(',')->required();
  gto->add_option("--inner-degree", c.inner_degree, "exactness degree of the inner rule (0: n)");
  add_output_options(*gto, c);

  auto* scan = app.add_subcommand("scan", "scaled constants along a degree grid");
  scan->add_option("--theorem", c.theorem, "cube | point | ball")->capture_default_str();
  add_space_options(*scan, c);
  scan->add_option("--lambda", c.lambda, "Gegenbauer parameter(s)")->delimiter(',');
  scan->add_option("--nmax", c.n_max, "largest grid value (grid 2, 4, ..., nmax)")->capture_default_str();
  add_solver_options(*scan, c);
  add_output_options(*scan, c);

  auto* table = app.add_subcommand("table", "numeric p = 2 constants against the closed forms");
  table->add_option("--kind", c.table, "interval | ball")->capture_default_str();
  table->add_option("--m", c.m, "dimension (ball)")->capture_default_str();
  table->add_option("--lambda", c.lambda, "Gegenbauer parameter")->delimiter(',');
  table->add_option("--nmax", c.n_max, "largest degree")->capture_default_str();
  add_output_options(*table, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  if (constant->parsed()) c.command = Command::kConstant;
  if (verify->parsed()) c.command = Command::kVerify;
  if (gto->parsed()) c.command = Command::kGto;
  if (scan->parsed()) c.command = Command::kScan;
  if (table->parsed()) c.command = Command::kTable;
  c.tolerances = with_env_overrides(c.tolerances);
  return c;
}

Tolerances with_env_overrides(Tolerances t) {
  const std::pair<const char*, double*> knobs[] = {
      {"NIKOLSKII_TOL_EIGEN", &t.eigen},
      {"NIKOLSKII_TOL_CONTRACTION", &t.contraction},
      {"NIKOLSKII_TOL_EXACT", &t.exact},
      {"NIKOLSKII_TOL_BALL_EXACT", &t.ball_exact},
      {"NIKOLSKII_TOL_REDUCTION_P2", &t.reduction_p2},
      {"NIKOLSKII_TOL_REDUCTION", &t.reduction},
      {"NIKOLSKII_TOL_CHAIN", &t.chain},
      {"NIKOLSKII_TOL_SUBSTITUTION", &t.substitution},
      {"NIKOLSKII_TOL_LOCATION", &t.location},
      {"NIKOLSKII_TOL_ENDPOINT", &t.endpoint},
  };
  for (const auto& [name, slot] : knobs) {
    if (const char* v = std::getenv(name)) *slot = parse_tolerance(name, v);
  }
  return t;
}

void validate(const RunConfig& c) {
  auto check = [](bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
  };
  check(c.p >= 1.0 && std::isfinite(c.p), "--p must be a finite number >= 1");
  check(c.m >= 1 && c.m <= 3, "--m must be 1, 2 or 3");
  check(c.restarts >= 1, "--restarts must be >= 1");
  check(c.rule_multiplier >= 0, "--rule-mult must be >= 0");
  for (double l : c.lambda) check(l >= 0.0, "--lambda values must be >= 0");
  switch (c.command) {
    case Command::kConstant:
    case Command::kScan: {
      if (c.command == Command::kConstant) {
        check(c.n >= 0, "--n must be >= 0");
        check(is_one_of(c.domain, {"interval", "cube", "ball"}), "--domain must be interval, cube or ball");
        check(c.domain != "interval" || c.m == 1, "--domain interval requires --m 1");
        check(c.at.empty() || static_cast<int>(c.at.size()) == c.m, "--at needs exactly m coordinates");
      } else {
        check(is_one_of(c.theorem, {"cube", "point", "ball"}), "--theorem must be cube, point or ball");
        check(c.n_max >= 1, "--nmax must be >= 1");
        if (c.theorem == "point") {
          check(static_cast<int>(c.alpha.size()) == c.m && static_cast<int>(c.beta.size()) == c.m,
                "--theorem point needs --alpha and --beta with m entries");
          for (double a : c.alpha) check(a >= 0.0, "--alpha values must be >= 0");
          for (double b : c.beta) check(b >= -0.5, "--beta values must be >= -1/2");
        } else {
          check(c.lambda.size() == 1 || static_cast<int>(c.lambda.size()) == c.m,
                "--lambda needs one value or one per coordinate");
          check(c.theorem == "cube" || c.lambda.size() == 1, "--theorem ball takes a single --lambda");
        }
      }
      const bool product = c.weight == "product";
      check(product || c.weight == "chebyshev" || c.weight == "legendre" || c.weight.rfind("gegenbauer:", 0) == 0,
            "--weight must be gegenbauer:<l>[,<l>...], chebyshev, legendre or product");
      if (c.command == Command::kConstant && product) {
        check(c.domain != "ball", "product weights live on the interval or cube");
        check(static_cast<int>(c.alpha.size()) == c.m && static_cast<int>(c.beta.size()) == c.m,
              "--weight product needs --alpha and --beta with m entries");
        for (double a : c.alpha) check(a >= 0.0, "--alpha values must be >= 0");
        for (double b : c.beta) check(b >= -0.5, "--beta values must be >= -1/2");
      }
      check(c.body == "cube" || c.body == "ball" || c.body == "octahedron" || c.body.rfind("lp:", 0) == 0,
            "--body must be cube, ball, octahedron or lp:<q>");
      break;
    }
    case Command::kVerify:
      check(is_one_of(c.suite, {"gto-eigen", "gto-contraction", "exact-formulas", "reductions", "chain",
                                "substitution", "extremal-location", "all"}),
            "unknown --suite '" + c.suite + "'");
      check(c.trials >= 1, "--trials must be >= 1");
      break;
    case Command::kGto: {
      check(is_one_of(c.gto_kind, {"interval", "cube", "ball-chebyshev", "ball-gegenbauer"}),
            "--kind must be interval, cube, ball-chebyshev or ball-gegenbauer");
      check(c.n >= 0, "--n must be >= 0");
      check(c.inner_degree >= 0, "--inner-degree must be >= 0");
      const int dim = c.gto_kind == "interval" ? 1 : c.m;
      if (c.gto_kind == "interval") {
        check(c.lambda.size() == 1, "--kind interval takes one --lambda");
      } else if (c.gto_kind == "cube") {
        check(static_cast<int>(c.lambda.size()) == c.m, "--kind cube needs one --lambda per coordinate");
      } else if (c.gto_kind == "ball-gegenbauer") {
        check(c.lambda.size() == 1 && c.lambda[0] > 0.0, "ball-gegenbauer requires a single --lambda > 0");
      } else {
        check(c.lambda.empty() || (c.lambda.size() == 1 && c.lambda[0] == 0.0),
              "ball-chebyshev has no --lambda (it is the lambda = 0 operator)");
      }
      const std::size_t t_dim = c.gto_kind == "cube" ? static_cast<std::size_t>(dim) : 1;
      check(c.t.size() == t_dim, "--t needs " + std::to_string(t_dim) + " value(s)");
      for (double v : c.t) check(v >= -1.0 && v <= 1.0, "--t values must lie in [-1, 1]");
      break;
    }
    case Command::kTable:
      check(is_one_of(c.table, {"interval", "ball"}), "--kind must be interval or ball");
      check(c.lambda.size() <= 1, "--lambda takes a single value");
      check(c.n_max >= 0, "--nmax must be >= 0");
      check(c.table == "interval" || c.m >= 2, "--kind ball needs --m 2 or 3");
      break;
  }
}

std::string error_record(const std::string& type, const std::string& code, const std::string& message) {
  return nlohmann::json{{"error", {{"type", type}, {"code", code}, {"message", message}}}}.dump();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const std::optional<RunConfig> config = parse_args(argc, argv, out);
    if (!config) return kExitOk;
    validate(*config);
    return run(*config, out, err);
  } catch (const UsageError& e) {
    err << error_record("usage", "usage", e.what()) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    const bool bad_input = e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kUnsupported || e.code() == ErrorCode::kNotIntegrable ||
                           e.code() == ErrorCode::kDimensionMismatch;
    err << error_record(bad_input ? "usage" : "runtime", std::string(to_string(e.code())), e.what()) << '\n';
    return bad_input ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << error_record("runtime", "internal", e.what()) << '\n';
    return kExitFailure;
  }
}

}  // namespace nikolskii::cli
