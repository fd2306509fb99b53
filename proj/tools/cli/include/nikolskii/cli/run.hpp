#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nikolskii::cli {

enum class Command { kConstant, kVerify, kGto, kScan, kTable };
enum class Format { kCsv, kJson };

/// Pass/fail thresholds of the verification suites. Each can be overridden
/// through an environment variable, e.g. NIKOLSKII_TOL_EIGEN=1e-9.
struct Tolerances {
  double eigen = 1e-10;
  double contraction = 1e-9;
  double exact = 1e-9;
  double ball_exact = 1e-7;
  double reduction_p2 = 1e-6;
  double reduction = 1e-3;
  double chain = 1e-9;
  double substitution = 1e-12;
  double location = 1e-6;
  double endpoint = 1e-4;
};

struct RunConfig {
  Command command = Command::kConstant;

  // Domain, weight and space.
  std::string domain = "interval";  // interval | cube | ball
  std::string weight = "legendre";  // gegenbauer:l[,l...] | chebyshev | legendre | product
  std::string body = "cube";        // cube | ball | octahedron | lp:q (cube domain)
  int m = 1;
  int n = 4;
  std::vector<double> at;  // empty: sup over the domain
  double p = 2.0;
  std::vector<double> lambda;
  std::vector<double> alpha;
  std::vector<double> beta;

  // scan / table
  std::string theorem = "ball";  // cube | point | ball
  int n_max = 20;
  std::string table = "interval";  // interval | ball

  // gto
  std::string gto_kind = "interval";  // interval | cube | ball-chebyshev | ball-gegenbauer
  std::vector<double> t;
  int inner_degree = 0;

  // verify
  std::string suite = "all";
  int trials = 50;

  // Solver and output.
  int restarts = 4;
  int rule_multiplier = 0;
  std::uint64_t seed = 1;
  Format format = Format::kCsv;
  std::string output;  // empty: stdout
  Tolerances tolerances;
};

/// Invalid command line or parameter combination; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv into a config. Returns nullopt after printing help to `out`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Applies NIKOLSKII_TOL_* environment overrides.
Tolerances with_env_overrides(Tolerances tolerances);

/// Rejects inconsistent parameter combinations before any computation.
void validate(const RunConfig& config);

/// Executes a validated config. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + validate + run with every failure reported as a JSON record on `err`.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// {"error": {"type": ..., "code": ..., "message": ...}}
std::string error_record(const std::string& type, const std::string& code, const std::string& message);

}  // namespace nikolskii::cli
