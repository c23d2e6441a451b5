#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "l1line/cli.hpp"
#include "support/temp_dir.hpp"

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "l1line");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = l1line::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const std::string kToy = std::string(L1LINE_TEST_DATA) + "/toy.csv";

TEST(Cli, PathOnToy) {
    const auto r = run({"path", kToy});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("segments: 4"), std::string::npos);
    EXPECT_NE(r.out.find("breakpoints: 0 3 3.5 11"), std::string::npos);
}

TEST(Cli, VerifyToy) {
    const auto r = run({"verify", kToy, "--grid", "200"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("max discrepancy"), std::string::npos);
    EXPECT_NE(r.out.find("verify: OK"), std::string::npos);
}

TEST(Cli, FitPrintsJson) {
    const auto r = run({"fit", kToy, "--lambda", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"preserved\":0"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"fit", kToy, "--lambda", "-1"}).code, l1line::cli::kExitUsage);
    EXPECT_EQ(run({"fit", kToy}).code, l1line::cli::kExitUsage);
    EXPECT_EQ(run({"path", kToy, "--bogus"}).code, l1line::cli::kExitUsage);
    EXPECT_EQ(run({"path", "/nonexistent.csv"}).code, l1line::cli::kExitUsage);
    EXPECT_EQ(run({}).code, l1line::cli::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, l1line::cli::kExitOk);
}

TEST(Cli, MalformedCsvReportsCell) {
    fixtures::TempDir dir;
    std::ofstream(dir / "bad.csv") << "1,2\n3,NaN\n";
    const auto r = run({"path", (dir / "bad.csv").string()});
    EXPECT_EQ(r.code, l1line::cli::kExitUsage);
    EXPECT_NE(r.err.find("line 2, column 2"), std::string::npos);
}

TEST(Cli, GenThenSweepWithTruth) {
    fixtures::TempDir dir;
    const auto csv = (dir / "d.csv").string();
    auto g = run({"gen", "--rows", "30", "--cols", "6", "--seed", "3", "--outliers", "2", "--out", csv});
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_TRUE(std::filesystem::exists(dir / "d.json"));
    const auto s = run({"sweep", csv, "--lambdas", "grid:0:50:6"});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(s.out.rfind("lambda,preserved,l0_fraction,error,objective,discordance\n", 0), 0u);
    std::size_t lines = 0;
    for (char c : s.out) lines += c == '\n';
    EXPECT_EQ(lines, 7u);
}

TEST(Cli, OutputIndependentOfThreads) {
    fixtures::TempDir dir;
    const auto csv = (dir / "d.csv").string();
    ASSERT_EQ(run({"gen", "--rows", "40", "--cols", "7", "--seed", "9", "--noise", "1", "--out", csv}).code, 0);
    const auto a = run({"--threads", "1", "path", csv});
    const auto b = run({"--threads", "4", "path", csv});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto sa = run({"--threads", "1", "sweep", csv});
    const auto sb = run({"--threads", "8", "sweep", csv});
    EXPECT_EQ(sa.out, sb.out);
}

TEST(Cli, PathToFileMatchesStdout) {
    fixtures::TempDir dir;
    const auto out = (dir / "p.json").string();
    ASSERT_EQ(run({"path", kToy, "--out", out}).code, 0);
    EXPECT_NE(slurp(out).find("\"lambda_lo\""), std::string::npos);
}

TEST(Cli, Bench) {
    const auto r = run({"bench", "--rows", "50", "--cols", "5", "--repeat", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"rows\":50"), std::string::npos);
}

}  // namespace
