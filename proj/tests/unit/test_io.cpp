#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <json.hpp>
#include <random>
#include <sstream>

#include "nikolskii/error.hpp"
#include "nikolskii/io.hpp"

using namespace nikolskii;
using nlohmann::json;

TEST(FormatNumber, RoundTripsAndSpellsSpecials) {
  for (double v : {0.0, 1.0, -2.5, 4.242640687119285, 1e-300, 6.02214076e23}) {
    EXPECT_DOUBLE_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(CsvTable, ShapeIsChecked) {
  CsvTable t;
  t.header = {"a", "b"};
  t.add_row({"1", "2"});
  EXPECT_THROW(t.add_row({"1"}), Error);
  EXPECT_EQ(t.str(), "a,b\n1,2\n");
}

TEST(CsvTable, ScanSchema) {
  const ScanResult scan = cube_limit_scan(ConvexBody::cube(1, 1.0), {0.5}, 2.0, 6);
  const std::string csv = scan_table(scan).str();
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,raw,scaled,predicted,gap");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(CsvTable, ExponentsRulesAndSystems) {
  const ExponentSet set = ExponentSet::total_degree(2, 1);
  EXPECT_EQ(exponent_table(set).str(), "k1,k2\n0,0\n0,1\n1,0\n");
  const CsvTable rule = rule_table(interval_rule(0.0, 0.0, 3));
  EXPECT_EQ(rule.header, (std::vector<std::string>{"x1", "weight"}));
  EXPECT_EQ(rule.rows.size(), 2u);
  const CsvTable sys = orthonormal_table(orthonormalize(set, WeightSpec::ball_radial(2, 0.5)));
  EXPECT_EQ(sys.rows.size(), 3u);
  EXPECT_EQ(sys.header.size(), 4u);
}

TEST(CsvTable, GtoDropsTinyEntries) {
  const ExponentSet set = ExponentSet::total_degree(1, 3);
  const GtoMatrix id = gto_matrix(GtoSpec::interval(0.5), set, Point{1.0});
  const CsvTable t = gto_table(id, set);
  EXPECT_EQ(t.header, (std::vector<std::string>{"target", "source", "coefficient"}));
  EXPECT_EQ(t.rows.size(), 4u);
}

TEST(Json, BodyRoundTrip) {
  for (const ConvexBody& body : {ConvexBody::cube(3, 2.0), ConvexBody::ball(2, 1.0), ConvexBody::octahedron(2, 0.5),
                                 ConvexBody::lp_ball(1.5, {1.0, 2.0}), ConvexBody::parallelepiped({1.0, 3.0})}) {
    const ConvexBody back = body_from_json(to_json(body));
    EXPECT_EQ(back.kind(), body.kind());
    EXPECT_EQ(back.sigma(), body.sigma());
    EXPECT_EQ(back.exponent(), body.exponent());
  }
  EXPECT_THROW(body_from_json("{\"kind\": \"torus\", \"m\": 2}"), Error);
}

TEST(Json, PolynomialRoundTrip) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  const ExponentSet set = ExponentSet::total_degree(3, 4);
  std::vector<double> c(set.size());
  for (double& v : c) v = g(rng);
  for (Basis basis : {Basis::kMonomial, Basis::kChebyshev}) {
    const Polynomial p(set, c, basis);
    const Polynomial back = polynomial_from_json(to_json(p));
    EXPECT_EQ(back.basis(), basis);
    EXPECT_EQ(back.exponents(), p.exponents());
    EXPECT_EQ(back.coeffs(), p.coeffs());
  }
}

TEST(Json, PolynomialReordersUnsortedInput) {
  const Polynomial p = polynomial_from_json(
      R"({"basis": "monomial", "dim": 1, "exponents": [[2], [0]], "coeffs": [3.0, 1.0]})");
  EXPECT_DOUBLE_EQ(p({2.0}), 13.0);
}

TEST(Json, ResultsCarryDiagnostics) {
  const SharpConstResult r = sharp_constant_p2_at_point(ExponentSet::total_degree(1, 3),
                                                        WeightSpec::gegenbauer_interval(0.5), Point{1.0});
  const json j = json::parse(to_json(r));
  EXPECT_DOUBLE_EQ(j["value"].get<double>(), r.value);
  EXPECT_EQ(j["diagnostics"]["method"], "kernel");
  EXPECT_TRUE(j.contains("extremizer"));
  const json s = json::parse(to_json(cube_limit_scan(ConvexBody::cube(1, 1.0), {0.0}, 2.0, 4)));
  EXPECT_EQ(s["grid"].size(), 2u);
  const json c = json::parse(to_json(contraction_check(GtoSpec::interval(0.5), ExponentSet::total_degree(1, 2), 2.0, 3)));
  EXPECT_EQ(c["trials"], 3);
}

TEST(WriteFile, WritesAndReportsFailure) {
  const auto path = std::filesystem::temp_directory_path() / "nikolskii_io_test.csv";
  write_file(path.string(), "a,b\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(content, "a,b\n");
  std::filesystem::remove(path);
  try {
    write_file("/nonexistent-dir/x.csv", "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}
