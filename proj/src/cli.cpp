#include "l1line/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "l1line/datagen.hpp"
#include "l1line/errors.hpp"
#include "l1line/fit.hpp"
#include "l1line/io.hpp"
#include "l1line/oracle.hpp"
#include "l1line/path.hpp"
#include "l1line/subspace.hpp"

namespace l1line::cli {

namespace {

struct Options {
    std::size_t threads = 0;
    bool header = false;
    std::string input;
    std::string output;

    // fit
    double lambda = 0.0;
    std::size_t components = 1;

    // sweep
    std::string lambdas = "path";
    std::string truth;

    // gen / bench
    std::size_t rows = 100;
    std::size_t cols = 10;
    std::uint64_t seed = 1;
    double noise = 0.0;
    double range = 100.0;
    std::size_t outliers = 0;
    std::size_t repeat = 3;

    // verify
    std::size_t grid = 200;
    double tolerance = 1e-9;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + o.output);
    f << text;
}

Parallelism parallelism(const Options& o) { return Parallelism{o.threads}; }

int cmd_fit(const Options& o, std::ostream& out) {
    check_lambda(o.lambda);
    const DataMatrix data = io::read_matrix(o.input, o.header);
    if (o.components == 1) {
        emit(o, out, io::line_to_json(fit_line(data, o.lambda, parallelism(o))) + "\n");
        return kExitOk;
    }
    const SubspaceFit sub = fit_subspace(data, o.lambda, o.components, parallelism(o));
    std::string s = "{\"degenerate\":" + std::string(sub.degenerate ? "true" : "false") + ",\"components\":[";
    for (std::size_t c = 0; c < sub.components.size(); ++c) {
        s += (c ? "," : "") + io::line_to_json(sub.components[c]);
    }
    emit(o, out, s + "]}\n");
    return kExitOk;
}

int cmd_path(const Options& o, std::ostream& out) {
    const DataMatrix data = io::read_matrix(o.input, o.header);
    const SolutionPath path = solution_path(data, parallelism(o));
    if (!o.output.empty()) {
        io::write_path(path, o.output);
    } else {
        out << io::path_to_json(path);
    }
    out << "segments: " << path.segments.size() << "\nbreakpoints:";
    for (double b : path.breakpoints) out << ' ' << b;
    out << '\n';
    return kExitOk;
}

std::vector<double> parse_lambda_list(const std::string& text) {
    std::vector<double> values;
    if (text.rfind("grid:", 0) == 0) {
        // grid:<lo>:<hi>:<count>
        std::stringstream ss(text.substr(5));
        std::string lo, hi, count;
        if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, count)) {
            throw UsageError("grid spec must be grid:<lo>:<hi>:<count>");
        }
        const double a = std::stod(lo);
        const double b = std::stod(hi);
        const long n = std::stol(count);
        if (n < 1 || !(b >= a)) throw UsageError("grid needs count >= 1 and hi >= lo");
        for (long k = 0; k < n; ++k) values.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(k) / (n - 1));
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                values.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw UsageError("bad lambda value '" + item + "'");
            }
        }
    }
    for (double l : values) check_lambda(l);
    return values;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const DataMatrix data = io::read_matrix(o.input, o.header);
    std::optional<Vector> truth;
    const std::filesystem::path truth_file = o.truth.empty() ? io::sidecar_path_for(o.input) : std::filesystem::path(o.truth);
    if (!o.truth.empty() || std::filesystem::exists(truth_file)) {
        truth = io::read_sidecar(truth_file).v_true;
        if (truth->size() != data.cols()) throw UsageError("truth vector length does not match data");
    }

    std::ostringstream csv;
    csv << "lambda,preserved,l0_fraction,error,objective" << (truth ? ",discordance" : "") << '\n';
    auto row = [&](double lambda, const FittedLine& line) {
        csv << io::format_number(lambda) << ',' << line.preserved << ',' << io::format_number(l0_fraction(line.v))
            << ',' << io::format_number(line.error) << ',' << io::format_number(line.objective_at(lambda));
        if (truth) {
            csv << ',' << (line.degenerate() ? std::string("nan") : io::format_number(discordance(*truth, line.v)));
        }
        csv << '\n';
    };

    if (o.lambdas == "path") {
        // Every breakpoint plus interval midpoints, and one point past the last.
        const SolutionPath path = solution_path(data, parallelism(o));
        for (std::size_t k = 0; k < path.segments.size(); ++k) {
            const auto& seg = path.segments[k];
            row(seg.lambda_lo, seg.line);
            const double mid = seg.lambda_hi == kInfinity ? seg.lambda_lo + std::max(1.0, 0.1 * seg.lambda_lo)
                                                          : 0.5 * (seg.lambda_lo + seg.lambda_hi);
            row(mid, seg.line);
        }
    } else {
        for (double lambda : parse_lambda_list(o.lambdas)) row(lambda, fit_line(data, lambda, parallelism(o)));
    }
    emit(o, out, csv.str());
    return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
    if (o.output.empty()) throw UsageError("gen needs --out <file.csv>");
    io::Sidecar meta;
    meta.seed = o.seed;
    meta.rows = o.rows;
    meta.cols = o.cols;
    meta.outliers = o.outliers;
    Synthetic syn = o.outliers > 0 ? gen_outlier_data(o.cols, o.rows, o.outliers, o.seed)
                                   : gen_line_data(o.cols, o.rows, o.seed, o.noise, o.range);
    if (o.outliers > 0) {
        meta.generator = "outlier";
        meta.noise_scale = 10.0;
        meta.coef_range = 100.0;
    } else {
        meta.generator = "line";
        meta.noise_scale = o.noise;
        meta.coef_range = o.range;
    }
    meta.v_true = syn.v_true;
    io::write_matrix(syn.data, o.output);
    const auto sidecar = io::sidecar_path_for(o.output);
    io::write_sidecar(meta, sidecar);
    out << "wrote " << o.output << " (" << o.rows << "x" << o.cols << ") and " << sidecar.string() << '\n';
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const DataMatrix data = io::read_matrix(o.input, o.header);
    const SolutionPath path = solution_path(data, parallelism(o));
    const auto shape = oracle::check_path_shape(path);
    const auto report = oracle::sweep_validate(data, path, o.grid, o.tolerance, parallelism(o));
    out << "segments: " << path.segments.size() << '\n';
    out << "path shape: " << (shape.ok() ? "ok" : "FAILED " + shape.detail) << '\n';
    out << "grid points: " << report.grid_size << " over [0, " << report.lambda_hi << "]\n";
    out << "max discrepancy " << report.max_discrepancy() << (report.ok() ? " < " : " >= ") << o.tolerance
        << " (vs fit " << report.max_fit_discrepancy << ", vs brute force " << report.max_brute_discrepancy << ")\n";
    if (!shape.ok() || !report.ok()) {
        out << "verify: FAILED (" << report.failures << " grid points above tolerance)\n";
        return kExitVerifyFailed;
    }
    out << "verify: OK\n";
    return kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
    check_lambda(o.lambda);
    const DataMatrix data = o.input.empty() ? gen_line_data(o.cols, o.rows, o.seed, 1.0).data
                                            : io::read_matrix(o.input, o.header);
    const std::size_t threads = resolve_threads(parallelism(o));
    double best = kInfinity;
    double total = 0.0;
    double objective = 0.0;
    for (std::size_t r = 0; r < std::max<std::size_t>(1, o.repeat); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        objective = fit_line(data, o.lambda, Parallelism{threads}).objective;
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, dt);
        total += dt;
    }
    out << "{\"rows\":" << data.rows() << ",\"cols\":" << data.cols() << ",\"threads\":" << threads
        << ",\"repeat\":" << o.repeat << ",\"seconds_best\":" << best
        << ",\"seconds_mean\":" << total / static_cast<double>(std::max<std::size_t>(1, o.repeat))
        << ",\"objective\":" << io::format_number(objective) << "}\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"l1-norm regularized l1-norm best-fit lines"};
    app.require_subcommand(1);
    Options o;

    app.add_option("--threads", o.threads, "worker threads (default: L1LINE_THREADS or all cores)");
    app.fallthrough();

    auto input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "numeric CSV, rows = observations")->required()->check(CLI::ExistingFile);
        sub->add_flag("--header", o.header, "first CSV line holds column names");
    };

    auto* fit = app.add_subcommand("fit", "fit the best line (or k components) for one lambda");
    input(fit);
    fit->add_option("--lambda", o.lambda, "penalty (>= 0)")->required();
    fit->add_option("--components", o.components, "successive components to fit")->check(CLI::PositiveNumber);
    fit->add_option("--out", o.output, "write JSON here instead of stdout");

    auto* path = app.add_subcommand("path", "compute the full solution path over lambda >= 0");
    input(path);
    path->add_option("--out", o.output, "write the path JSON here");

    auto* sweep = app.add_subcommand("sweep", "tabulate sparsity, error and discordance over lambda");
    input(sweep);
    sweep->add_option("--lambdas", o.lambdas, "'path' (default), a comma list, or grid:<lo>:<hi>:<count>");
    sweep->add_option("--truth", o.truth, "sidecar JSON with v_true (default: <input>.json if present)");
    sweep->add_option("--out", o.output, "write CSV here instead of stdout");

    auto* gen = app.add_subcommand("gen", "generate synthetic data plus a JSON sidecar");
    gen->add_option("--rows", o.rows, "observations")->check(CLI::PositiveNumber);
    gen->add_option("--cols", o.cols, "features")->check(CLI::Range(2, 1 << 20));
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("--noise", o.noise, "Laplace noise scale for clean data")->check(CLI::NonNegativeNumber);
    gen->add_option("--range", o.range, "alpha ~ U(-range, range) for clean data")->check(CLI::PositiveNumber);
    gen->add_option("--outliers", o.outliers, "outlier rows (switches to the outlier recipe)");
    gen->add_option("--out", o.output, "output CSV path")->required();

    auto* verify = app.add_subcommand("verify", "check the path against fit and brute force on a lambda grid");
    input(verify);
    verify->add_option("--grid", o.grid, "grid points")->check(CLI::PositiveNumber);
    verify->add_option("--tolerance", o.tolerance, "relative tolerance")->check(CLI::PositiveNumber);

    auto* bench = app.add_subcommand("bench", "time fit_line");
    bench->add_option("input", o.input, "CSV to time (default: generated data)")->check(CLI::ExistingFile);
    bench->add_flag("--header", o.header, "first CSV line holds column names");
    bench->add_option("--rows", o.rows, "generated observations")->check(CLI::PositiveNumber);
    bench->add_option("--cols", o.cols, "generated features")->check(CLI::Range(2, 1 << 20));
    bench->add_option("--seed", o.seed, "generator seed");
    bench->add_option("--lambda", o.lambda, "penalty");
    bench->add_option("--repeat", o.repeat, "repetitions")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*fit) return cmd_fit(o, out);
        if (*path) return cmd_path(o, out);
        if (*sweep) return cmd_sweep(o, out);
        if (*gen) return cmd_gen(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*bench) return cmd_bench(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace l1line::cli
