#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "l1line/errors.hpp"
#include "l1line/io.hpp"
#include "l1line/path.hpp"
#include "support/fixtures.hpp"
#include "support/temp_dir.hpp"

namespace {

namespace io = l1line::io;

l1line::DataMatrix parse(const std::string& text, bool header = false) {
    std::istringstream in(text);
    return io::parse_matrix(in, header);
}

std::string parse_error(const std::string& text) {
    try {
        parse(text);
    } catch (const l1line::ParseError& e) {
        return e.what();
    }
    return "";
}

TEST(ReadMatrix, ToyFile) {
    const auto d = io::read_matrix(std::string(L1LINE_TEST_DATA) + "/toy.csv");
    EXPECT_EQ(d, fixtures::toy());
}

TEST(ParseMatrix, HeaderAndWhitespace) {
    const auto d = parse("a, b ,c\n1, 2,3\n\n-4.5,+5,6e1\n", true);
    EXPECT_EQ(d.rows(), 2u);
    EXPECT_EQ(d.feature_names(), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_EQ(d(1, 0), -4.5);
    EXPECT_EQ(d(1, 2), 60.0);
}

TEST(ParseMatrix, ErrorsNameTheCell) {
    EXPECT_NE(parse_error("1,2\n3,NaN\n").find("line 2, column 2"), std::string::npos);
    EXPECT_NE(parse_error("1,2\n3,inf\n").find("line 2, column 2"), std::string::npos);
    EXPECT_NE(parse_error("1,2\n3,x\n").find("line 2, column 2"), std::string::npos);
    EXPECT_NE(parse_error("1,2\n3,4,5\n").find("line 2"), std::string::npos);
    EXPECT_FALSE(parse_error("").empty());
    EXPECT_FALSE(parse_error("1\n2\n").empty());
    EXPECT_THROW(io::read_matrix("/nonexistent/file.csv"), l1line::ParseError);
}

TEST(WriteMatrix, RoundTripsExactly) {
    std::mt19937_64 rng(2);
    const auto d = fixtures::random_data(rng, 7, 3);
    std::ostringstream out;
    io::write_matrix(d, out);
    EXPECT_EQ(parse(out.str()), d);
}

TEST(FormatNumber, SeventeenDigits) {
    EXPECT_EQ(io::format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(io::format_number(3.5), "3.5");
    EXPECT_EQ(std::stod(io::format_number(1.0 / 3)), 1.0 / 3);
}

TEST(PathJson, RoundTrip) {
    const auto path = l1line::solution_path(fixtures::toy());
    const auto text = io::path_to_json(path);
    EXPECT_NE(text.find("null"), std::string::npos);
    const auto back = io::path_from_json(text);
    ASSERT_EQ(back.segments.size(), path.segments.size());
    for (std::size_t s = 0; s < path.segments.size(); ++s) {
        EXPECT_EQ(back.segments[s].lambda_lo, path.segments[s].lambda_lo);
        EXPECT_EQ(back.segments[s].lambda_hi, path.segments[s].lambda_hi);
        EXPECT_EQ(back.segments[s].line.v, path.segments[s].line.v);
        EXPECT_EQ(back.segments[s].line.preserved, path.segments[s].line.preserved);
    }
    EXPECT_EQ(back.breakpoints, path.breakpoints);
}

TEST(PathJson, EmptyAndMalformed) {
    EXPECT_THROW(io::path_to_json(l1line::SolutionPath{}), l1line::UsageError);
    EXPECT_THROW(io::path_from_json("[]"), l1line::ParseError);
    EXPECT_THROW(io::path_from_json("{"), l1line::ParseError);
    EXPECT_THROW(io::path_from_json("[{\"lambda_lo\": 0}]"), l1line::ParseError);
}

TEST(Sidecar, RoundTripAndNaming) {
    fixtures::TempDir dir;
    io::Sidecar s;
    s.generator = "outlier";
    s.seed = 123456789012345ULL;
    s.rows = 10;
    s.cols = 6;
    s.noise_scale = 10.0;
    s.coef_range = 100.0;
    s.outliers = 2;
    s.v_true = {0.1, -0.2, 0.3, 0.4, 0.5, 1.0 / 3};
    io::write_sidecar(s, dir / "x.json");
    const auto back = io::read_sidecar(dir / "x.json");
    EXPECT_EQ(back.generator, s.generator);
    EXPECT_EQ(back.seed, s.seed);
    EXPECT_EQ(back.outliers, 2u);
    EXPECT_EQ(back.v_true, s.v_true);
    EXPECT_EQ(io::sidecar_path_for("dir/data.csv"), std::filesystem::path("dir/data.json"));
}

}  // namespace
