#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "l1line/core.hpp"

namespace l1line::io {

/// Numeric CSV: comma-delimited, optional header row, no quoting.
/// Throws ParseError with the 1-based line and column of the offending cell.
DataMatrix read_matrix(const std::filesystem::path& file, bool has_header = false);
DataMatrix parse_matrix(std::istream& in, bool has_header = false);

void write_matrix(const DataMatrix& data, const std::filesystem::path& file);
void write_matrix(const DataMatrix& data, std::ostream& out);

/// Shortest-safe text for a double: 17 significant digits.
std::string format_number(double x);

/// JSON array of segments {lambda_lo, lambda_hi, preserved, v, error,
/// penalty_norm, z_lo, z_hi}; lambda_hi and z_hi are null for the terminal
/// segment. Throws UsageError on an empty path.
std::string path_to_json(const SolutionPath& path);
void write_path(const SolutionPath& path, const std::filesystem::path& file);
SolutionPath path_from_json(const std::string& text);
SolutionPath read_path(const std::filesystem::path& file);

/// Single line as a JSON object {preserved, v, error, penalty_norm, objective, lambda}.
std::string line_to_json(const FittedLine& line);

/// Metadata written next to generated data.
struct Sidecar {
    std::string generator;  ///< "line" or "outlier"
    std::uint64_t seed = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    double noise_scale = 0.0;
    double coef_range = 0.0;
    std::size_t outliers = 0;
    Vector v_true;
};

std::string sidecar_to_json(const Sidecar& s);
void write_sidecar(const Sidecar& s, const std::filesystem::path& file);
Sidecar read_sidecar(const std::filesystem::path& file);

/// data.csv -> data.json
std::filesystem::path sidecar_path_for(const std::filesystem::path& csv);

}  // namespace l1line::io
