#pragma once

#include <string>
#include <vector>

#include "nikolskii/asymptotics.hpp"
#include "nikolskii/geometry.hpp"
#include "nikolskii/gto.hpp"
#include "nikolskii/orthonormal.hpp"
#include "nikolskii/quadrature.hpp"
#include "nikolskii/sharpconst.hpp"

namespace nikolskii {

/// Shortest-roundtrip-ish decimal form used by every writer ("nan", "inf" spelled out).
std::string format_number(double value);

/// Plain CSV table; cells are written verbatim, rows must match the header width.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::string str() const;
};

/// n,raw,scaled,predicted,gap with one row per grid point.
CsvTable scan_table(const ScanResult& scan);

/// One multi-index per row, columns k1..km.
CsvTable exponent_table(const ExponentSet& exponents);
/// Node coordinates x1..xm and the weight.
CsvTable rule_table(const QuadratureRule& rule);
/// Row i: coefficients of phi_i in the source basis, one column per exponent.
CsvTable orthonormal_table(const OrthonormalSystem& system);
/// target,source,coefficient for the nonzero entries of a GTO matrix.
CsvTable gto_table(const GtoMatrix& matrix, const ExponentSet& exponents, double drop = 1e-13);

/// {"kind": ..., "m": ..., "params": {...}}.
std::string to_json(const ConvexBody& body, int indent = 2);
ConvexBody body_from_json(const std::string& text);
/// {"basis": ..., "exponents": [[...], ...], "coeffs": [...]}.
std::string to_json(const Polynomial& poly, int indent = 2);
Polynomial polynomial_from_json(const std::string& text);
std::string to_json(const ContractionReport& report, int indent = 2);
std::string to_json(const Diagnostics& diagnostics, int indent = 2);
std::string to_json(const SharpConstResult& result, int indent = 2);
std::string to_json(const ScanResult& scan, int indent = 2);

/// Writes `content` to `path`, replacing the file. Throws Error on I/O failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace nikolskii
