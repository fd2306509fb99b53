#pragma once

#include <string>
#include <vector>

#include "nikolskii/cli/run.hpp"
#include "nikolskii/geometry.hpp"

namespace nikolskii::cli {

struct CheckRecord {
  std::string suite;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs one named suite (or every suite for "all").
std::vector<CheckRecord> run_suite(const std::string& suite, const RunConfig& config);

ConvexBody make_body(const std::string& name, int m);

}  // namespace nikolskii::cli
