#include "l1line/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include "json.hpp"
#include <sstream>
#include <string_view>

#include "l1line/errors.hpp"

namespace l1line::io {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParseError("cannot open " + file.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + file.string());
}

void append_vector(std::string& s, const Vector& v) {
    s += '[';
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j) s += ',';
        s += format_number(v[j]);
    }
    s += ']';
}

double number_or_inf(const json& j) { return j.is_null() ? kInfinity : j.get<double>(); }

}  // namespace

DataMatrix parse_matrix(std::istream& in, bool has_header) {
    std::vector<std::string> names;
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    std::string line;
    bool header_pending = has_header;

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split(line);
        if (header_pending) {
            for (auto c : cells) names.emplace_back(c);
            cols = cells.size();
            header_pending = false;
            continue;
        }
        if (cols == 0) cols = cells.size();
        if (cells.size() != cols) {
            fail(line_no, std::min(cells.size(), cols) + 1,
                 "expected " + std::to_string(cols) + " cells, found " + std::to_string(cells.size()));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto cell = cells[c];
            double x = 0.0;
            const char* first = cell.data();
            const char* last = cell.data() + cell.size();
            if (!cell.empty() && *first == '+') ++first;
            const auto [ptr, ec] = std::from_chars(first, last, x);
            if (cell.empty() || ec != std::errc() || ptr != last) {
                fail(line_no, c + 1, "not a number: '" + std::string(cell) + "'");
            }
            if (!std::isfinite(x)) fail(line_no, c + 1, "non-finite value '" + std::string(cell) + "'");
            values.push_back(x);
        }
        ++rows;
    }
    if (rows == 0) throw ParseError("no data rows");
    if (cols < 2) throw ParseError("need at least two columns, found " + std::to_string(cols));
    return DataMatrix(rows, cols, std::move(values), std::move(names));
}

DataMatrix read_matrix(const std::filesystem::path& file, bool has_header) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file.string());
    try {
        return parse_matrix(in, has_header);
    } catch (const ParseError& e) {
        throw ParseError(file.string() + ": " + e.what());
    }
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_matrix(const DataMatrix& data, std::ostream& out) {
    if (!data.feature_names().empty()) {
        for (std::size_t j = 0; j < data.cols(); ++j) out << (j ? "," : "") << data.feature_names()[j];
        out << '\n';
    }
    for (std::size_t i = 0; i < data.rows(); ++i) {
        for (std::size_t j = 0; j < data.cols(); ++j) out << (j ? "," : "") << format_number(data(i, j));
        out << '\n';
    }
}

void write_matrix(const DataMatrix& data, const std::filesystem::path& file) {
    std::ostringstream os;
    write_matrix(data, os);
    write_file(file, os.str());
}

std::string line_to_json(const FittedLine& line) {
    std::string s = "{\"preserved\":" + std::to_string(line.preserved) + ",\"v\":";
    append_vector(s, line.v);
    s += ",\"error\":" + format_number(line.error);
    s += ",\"penalty_norm\":" + format_number(line.penalty_norm);
    s += ",\"objective\":" + format_number(line.objective);
    s += ",\"lambda\":" + format_number(line.lambda) + "}";
    return s;
}

std::string path_to_json(const SolutionPath& path) {
    if (path.segments.empty()) throw UsageError("refusing to serialize an empty path");
    std::string s = "[\n";
    for (std::size_t k = 0; k < path.segments.size(); ++k) {
        const auto& seg = path.segments[k];
        const bool terminal = seg.lambda_hi == kInfinity;
        s += "  {\"lambda_lo\":" + format_number(seg.lambda_lo);
        s += ",\"lambda_hi\":" + (terminal ? std::string("null") : format_number(seg.lambda_hi));
        s += ",\"preserved\":" + std::to_string(seg.line.preserved) + ",\"v\":";
        append_vector(s, seg.line.v);
        s += ",\"error\":" + format_number(seg.line.error);
        s += ",\"penalty_norm\":" + format_number(seg.line.penalty_norm);
        s += ",\"z_lo\":" + format_number(seg.z_lo);
        s += ",\"z_hi\":" + (seg.z_hi == kInfinity ? std::string("null") : format_number(seg.z_hi));
        s += k + 1 < path.segments.size() ? "},\n" : "}\n";
    }
    s += "]\n";
    return s;
}

void write_path(const SolutionPath& path, const std::filesystem::path& file) {
    write_file(file, path_to_json(path));
}

SolutionPath path_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid path JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) throw ParseError("path JSON must be a nonempty array");

    SolutionPath path;
    try {
        for (const auto& item : doc) {
            PathSegment seg;
            seg.lambda_lo = item.at("lambda_lo").get<double>();
            seg.lambda_hi = number_or_inf(item.at("lambda_hi"));
            seg.line.preserved = item.at("preserved").get<std::size_t>();
            seg.line.v = item.at("v").get<Vector>();
            seg.line.error = item.at("error").get<double>();
            seg.line.penalty_norm = item.at("penalty_norm").get<double>();
            seg.line.lambda = seg.lambda_lo;
            seg.z_lo = item.at("z_lo").get<double>();
            seg.z_hi = number_or_inf(item.at("z_hi"));
            seg.line.objective = seg.z_lo;
            path.breakpoints.push_back(seg.lambda_lo);
            path.segments.push_back(std::move(seg));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed path segment: ") + e.what());
    }
    return path;
}

SolutionPath read_path(const std::filesystem::path& file) { return path_from_json(read_file(file)); }

std::string sidecar_to_json(const Sidecar& s) {
    std::string out = "{\n  \"generator\": \"" + s.generator + "\",\n";
    out += "  \"rng\": \"mt19937_64, 53-bit uniforms, inverse-CDF Laplace\",\n";
    out += "  \"seed\": " + std::to_string(s.seed) + ",\n";
    out += "  \"rows\": " + std::to_string(s.rows) + ",\n";
    out += "  \"cols\": " + std::to_string(s.cols) + ",\n";
    out += "  \"noise_scale\": " + format_number(s.noise_scale) + ",\n";
    out += "  \"coef_range\": " + format_number(s.coef_range) + ",\n";
    out += "  \"outliers\": " + std::to_string(s.outliers) + ",\n";
    out += "  \"v_true\": ";
    append_vector(out, s.v_true);
    out += "\n}\n";
    return out;
}

void write_sidecar(const Sidecar& s, const std::filesystem::path& file) { write_file(file, sidecar_to_json(s)); }

Sidecar read_sidecar(const std::filesystem::path& file) {
    try {
        const json doc = json::parse(read_file(file));
        Sidecar s;
        s.generator = doc.value("generator", "");
        s.seed = doc.value("seed", std::uint64_t{0});
        s.rows = doc.value("rows", std::size_t{0});
        s.cols = doc.value("cols", std::size_t{0});
        s.noise_scale = doc.value("noise_scale", 0.0);
        s.coef_range = doc.value("coef_range", 0.0);
        s.outliers = doc.value("outliers", std::size_t{0});
        s.v_true = doc.at("v_true").get<Vector>();
        return s;
    } catch (const json::exception& e) {
        throw ParseError(file.string() + ": " + e.what());
    }
}

std::filesystem::path sidecar_path_for(const std::filesystem::path& csv) {
    auto p = csv;
    p.replace_extension(".json");
    return p;
}

}  // namespace l1line::io
