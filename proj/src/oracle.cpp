#include "l1line/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "l1line/errors.hpp"
#include "l1line/fit.hpp"
#include "l1line/ratio_engine.hpp"

namespace l1line::oracle {

double relative_gap(double a, double b) noexcept {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

ColumnOptimum brute_force_column(const DataMatrix& data, std::size_t pivot, std::size_t target, double lambda) {
    check_lambda(lambda);
    if (pivot >= data.cols() || target >= data.cols()) throw UsageError("column index out of range");

    std::vector<double> candidates{0.0};
    for (std::size_t i = 0; i < data.rows(); ++i) {
        if (data(i, pivot) != 0.0) candidates.push_back(data(i, target) / data(i, pivot));
    }
    std::sort(candidates.begin(), candidates.end());

    ColumnOptimum best{0.0, kInfinity};
    for (double t : candidates) {
        double f = lambda * std::abs(t);
        for (std::size_t i = 0; i < data.rows(); ++i) f += std::abs(data(i, target) - t * data(i, pivot));
        if (f < best.objective) best = {t, f};
    }
    return best;
}

FittedLine brute_force_pivot(const DataMatrix& data, std::size_t pivot, double lambda) {
    check_lambda(lambda);
    const std::size_t m = data.cols();
    bool support = false;
    for (std::size_t i = 0; i < data.rows() && !support; ++i) support = data(i, pivot) != 0.0;
    Vector v(m, 0.0);
    v[pivot] = 1.0;
    if (!support) return make_line(data, std::move(v), pivot, lambda);

    double objective = lambda;
    for (std::size_t j = 0; j < m; ++j) {
        if (j == pivot) continue;
        const auto opt = brute_force_column(data, pivot, j, lambda);
        v[j] = opt.value;
        objective += opt.objective;
    }
    FittedLine line = make_line(data, std::move(v), pivot, lambda);
    // Column-separable sum; agrees with the row-major recomputation up to rounding.
    line.objective = objective;
    line.error = objective - lambda * line.penalty_norm;
    return line;
}

FittedLine brute_force_line(const DataMatrix& data, double lambda) {
    FittedLine best = brute_force_pivot(data, 0, lambda);
    for (std::size_t p = 1; p < data.cols(); ++p) {
        FittedLine cand = brute_force_pivot(data, p, lambda);
        if (cand.objective < best.objective) best = std::move(cand);
    }
    return best;
}

namespace {

[[noreturn]] void refute(const RatioColumn& col, double value, double lambda, const std::string& what) {
    std::ostringstream os;
    os.precision(17);
    os << "column " << col.target << " (pivot " << col.pivot << "), v_j = " << value << ", lambda = " << lambda
       << ": " << what;
    throw OptimalityRefuted(os.str());
}

}  // namespace

DualCertificate dual_certificate(const RatioColumn& col, double value, double lambda) {
    check_lambda(lambda);
    if (col.empty()) throw UsageError("dual certificate needs a nonempty column");

    const double scale = std::max({1.0, col.total_weight, lambda});
    const double tol = 1e-9 * scale;
    const double tie = 1e-12 * std::max(1.0, std::abs(value));

    DualCertificate cert;
    cert.column = col.target;
    cert.pivot = col.pivot;
    cert.lambda = lambda;
    cert.pi.assign(col.size(), 0.0);

    // Points strictly above the line get pi = +w, strictly below get -w; the
    // points on the line (zero residual) and gamma when v_j = 0 absorb the
    // balance needed for sum(pi) + gamma = 0.
    double fixed = 0.0;
    double free_capacity = 0.0;
    std::vector<std::size_t> on_line;
    for (std::size_t k = 0; k < col.size(); ++k) {
        const auto& e = col.entries[k];
        if (std::abs(e.ratio - value) <= tie) {
            on_line.push_back(k);
            free_capacity += e.weight;
        } else if (e.ratio > value) {
            cert.pi[k] = e.weight;
        } else {
            cert.pi[k] = -e.weight;
        }
        fixed += cert.pi[k];
    }

    double gamma_fixed = 0.0;
    double gamma_capacity = 0.0;
    if (value == 0.0) {
        gamma_capacity = lambda;
    } else {
        gamma_fixed = value > 0.0 ? -lambda : lambda;
    }

    // Need sum(free pi) + free gamma = -(fixed + gamma_fixed).
    const double need = -(fixed + gamma_fixed);
    const double capacity = free_capacity + gamma_capacity;
    if (std::abs(need) > capacity + tol) {
        std::ostringstream os;
        os.precision(17);
        os << "no dual feasible multipliers: required balance " << need << " exceeds capacity " << capacity;
        refute(col, value, lambda, os.str());
    }
    const double share = capacity > 0.0 ? std::clamp(need / capacity, -1.0, 1.0) : 0.0;
    for (std::size_t k : on_line) cert.pi[k] = share * col.entries[k].weight;
    cert.gamma = gamma_fixed + share * gamma_capacity;

    // Feasibility.
    double pi_sum = 0.0;
    for (std::size_t k = 0; k < col.size(); ++k) {
        pi_sum += cert.pi[k];
        if (std::abs(cert.pi[k]) > col.entries[k].weight * (1.0 + 1e-12)) {
            refute(col, value, lambda, "pi outside |x_i,pivot| box at sorted position " + std::to_string(k));
        }
    }
    if (std::abs(pi_sum + cert.gamma) > tol) refute(col, value, lambda, "dual equality sum(pi) + gamma != 0");
    if (std::abs(cert.gamma) > lambda + tol) refute(col, value, lambda, "|gamma| exceeds lambda");

    // Complementary slackness.
    for (std::size_t k = 0; k < col.size(); ++k) {
        const auto& e = col.entries[k];
        const double residual = e.weight * (e.ratio - value);
        if (std::abs(cert.pi[k]) < e.weight - tol && std::abs(residual) > tol) {
            refute(col, value, lambda, "interior pi with nonzero residual");
        }
        if (residual > tol && cert.pi[k] < e.weight - tol) refute(col, value, lambda, "slack sign mismatch");
        if (residual < -tol && cert.pi[k] > -e.weight + tol) refute(col, value, lambda, "slack sign mismatch");
    }
    if (value != 0.0 && std::abs(std::abs(cert.gamma) - lambda) > tol) {
        refute(col, value, lambda, "v_j != 0 but |gamma| != lambda");
    }

    // Strong duality: sum_i w_i |r_i - t| + lambda |t| == sum_i r_i pi_i.
    double primal = lambda * std::abs(value);
    double dual = 0.0;
    for (std::size_t k = 0; k < col.size(); ++k) {
        primal += col.entries[k].weight * std::abs(col.entries[k].ratio - value);
        dual += col.entries[k].ratio * cert.pi[k];
    }
    cert.primal_objective = primal;
    cert.dual_objective = dual;
    if (std::abs(primal - dual) > 1e-9 * std::max(1.0, std::abs(primal))) {
        std::ostringstream os;
        os.precision(17);
        os << "duality gap " << primal - dual;
        refute(col, value, lambda, os.str());
    }
    return cert;
}

PathShapeReport check_path_shape(const SolutionPath& path, double continuity_tol, double slope_tol) {
    PathShapeReport r;
    if (path.segments.empty()) {
        r.tiles = false;
        r.detail = "empty path";
        return r;
    }
    std::ostringstream detail;
    detail.precision(17);
    if (path.segments.front().lambda_lo != 0.0) {
        r.tiles = false;
        detail << "path starts at " << path.segments.front().lambda_lo << "; ";
    }
    if (path.segments.back().lambda_hi != kInfinity) {
        r.tiles = false;
        detail << "path does not extend to infinity; ";
    }
    for (std::size_t k = 0; k + 1 < path.segments.size(); ++k) {
        const auto& cur = path.segments[k];
        const auto& nxt = path.segments[k + 1];
        if (!(cur.lambda_lo < cur.lambda_hi) || cur.lambda_hi != nxt.lambda_lo) {
            r.tiles = false;
            detail << "gap or overlap at segment " << k << "; ";
        }
        const double jump = relative_gap(cur.line.objective_at(cur.lambda_hi), nxt.line.objective_at(nxt.lambda_lo));
        r.max_jump = std::max(r.max_jump, jump);
        if (jump > continuity_tol) {
            r.continuous = false;
            detail << "jump " << jump << " at lambda " << nxt.lambda_lo << "; ";
        }
        const double rise = nxt.line.penalty_norm - cur.line.penalty_norm;
        r.max_slope_increase = std::max(r.max_slope_increase, rise);
        if (rise > slope_tol) {
            r.concave = false;
            detail << "slope rises by " << rise << " at lambda " << nxt.lambda_lo << "; ";
        }
    }
    const auto& last = path.segments.back().line;
    std::size_t nonzero = 0;
    for (double x : last.v) nonzero += x != 0.0 ? 1 : 0;
    if (nonzero != 1 || last.v[last.preserved] != 1.0) {
        r.terminal_unit = false;
        detail << "terminal line has " << nonzero << " nonzero coordinates; ";
    }
    r.detail = detail.str();
    return r;
}

SweepReport sweep_validate(const DataMatrix& data, const SolutionPath& path, std::size_t grid_size, double tolerance,
                           Parallelism parallelism) {
    SweepReport report;
    report.grid_size = grid_size;
    report.tolerance = tolerance;
    if (grid_size == 0) return report;
    if (path.segments.empty()) throw UsageError("cannot validate an empty path");

    const double largest = path.segments.back().lambda_lo;
    report.lambda_hi = 1.1 * largest;

    for (std::size_t g = 0; g < grid_size; ++g) {
        const double lambda = grid_size == 1 ? 0.0 : report.lambda_hi * static_cast<double>(g) /
                                                          static_cast<double>(grid_size - 1);
        const double from_path = path.objective_at(lambda);
        const double from_fit = fit_line(data, lambda, parallelism).objective;
        const double from_brute = brute_force_line(data, lambda).objective;
        const double gap_fit = relative_gap(from_path, from_fit);
        const double gap_brute = relative_gap(from_path, from_brute);
        if (std::max(gap_fit, gap_brute) > report.max_discrepancy()) report.worst_lambda = lambda;
        report.max_fit_discrepancy = std::max(report.max_fit_discrepancy, gap_fit);
        report.max_brute_discrepancy = std::max(report.max_brute_discrepancy, gap_brute);
        if (gap_fit > tolerance || gap_brute > tolerance) ++report.failures;
    }
    return report;
}

}  // namespace l1line::oracle
