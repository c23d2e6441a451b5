#include "l1line/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "l1line/errors.hpp"
#include "l1line/ratio_engine.hpp"

namespace l1line {

namespace {

struct StepEvent {
    double lambda;
    std::size_t pivot;
    std::size_t column;  // index into PivotBreakpoints::columns
    std::size_t step;
};

// Sum_i |x_ij - t x_i,pivot| over all rows, including rows with a zero pivot.
double column_error(const DataMatrix& data, std::size_t pivot, std::size_t target, double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < data.rows(); ++i) s += std::abs(data(i, target) - t * data(i, pivot));
    return s;
}

// Running state of one pivot's line while sweeping the breakpoint grid.
struct PivotState {
    Vector v;
    std::vector<double> column_errors;  // aligned with PivotBreakpoints::columns
    double intercept = 0.0;             // error term
    double slope = 0.0;                 // ||v||_1
    std::size_t version = 0;
    bool dirty = true;

    double z(double lambda) const { return intercept + lambda * slope; }
};

struct Piece {
    double start;
    std::size_t pivot;
};

}  // namespace

double ColumnBreakpoints::value_at(double lambda) const {
    double value = 0.0;
    for (const auto& s : steps) {
        if (s.lambda > lambda + kBreakpointTolerance) break;
        value = s.value;
    }
    return value;
}

std::vector<double> PivotBreakpoints::breakpoint_set() const {
    std::vector<double> out;
    for (const auto& c : columns) {
        for (const auto& s : c.steps) {
            if (s.lambda > 0.0) out.push_back(s.lambda);
        }
        out.push_back(c.lambda_max);
    }
    return dedup_breakpoints(std::move(out));
}

Vector PivotBreakpoints::solution_at(double lambda) const {
    Vector v(dimension, 0.0);
    v[pivot] = 1.0;
    if (degenerate) return v;
    for (const auto& c : columns) v[c.target] = c.value_at(lambda);
    return v;
}

std::vector<double> dedup_breakpoints(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    out.reserve(values.size());
    for (double x : values) {
        if (out.empty() || x - out.back() > kBreakpointTolerance) out.push_back(x);
    }
    return out;
}

PivotBreakpoints pivot_breakpoints(const DataMatrix& data, std::size_t pivot) {
    if (pivot >= data.cols()) throw UsageError("pivot out of range");
    PivotBreakpoints out;
    out.pivot = pivot;
    out.dimension = data.cols();

    RatioColumn col;
    for (std::size_t j = 0; j < data.cols(); ++j) {
        if (j == pivot) continue;
        build_column_into(data, pivot, j, col);  // throws EmptyPivot

        ColumnBreakpoints cb;
        cb.target = j;
        double lambda_max = 0.0;
        std::vector<ColumnStep> raw;
        for (std::size_t k = 0; k < col.size(); ++k) {
            const auto& e = col.entries[k];
            const double below = k == 0 ? 0.0 : col.prefix_weights[k - 1];
            const double above = col.total_weight - col.prefix_weights[k];
            // Left end of the lambda range on which this ratio is optimal; the
            // range has width 2 |x_i,pivot|.
            const double lambda = ratio_sign(e.ratio) * (above - below) - e.weight;
            const double upper = lambda + 2.0 * e.weight;
            const double value = e.ratio == 0.0 ? 0.0 : e.ratio;  // no -0 in the output
            if (upper > 0.0) raw.push_back({std::max(0.0, lambda), value});
            // A zero ratio's window already belongs to the all-zero tail.
            if (value != 0.0 && upper > lambda_max) lambda_max = upper;
        }
        raw.push_back({lambda_max, 0.0});
        std::stable_sort(raw.begin(), raw.end(),
                         [](const ColumnStep& a, const ColumnStep& b) { return a.lambda < b.lambda; });

        for (const auto& s : raw) {
            if (!cb.steps.empty() && s.lambda - cb.steps.back().lambda <= kBreakpointTolerance) {
                cb.steps.back().value = s.value;
            } else {
                cb.steps.push_back(s);
            }
            // Tied ratios give consecutive windows with the same value.
            if (cb.steps.size() > 1 && cb.steps[cb.steps.size() - 2].value == cb.steps.back().value) cb.steps.pop_back();
        }
        cb.lambda_max = lambda_max;
        out.columns.push_back(std::move(cb));
    }
    return out;
}

MajorBreakpoints major_breakpoints(const DataMatrix& data, Parallelism parallelism) {
    MajorBreakpoints major;
    major.pivots.resize(data.cols());
    parallel_for(data.cols(), parallelism, [&](std::size_t pivot) {
        try {
            major.pivots[pivot] = pivot_breakpoints(data, pivot);
        } catch (const EmptyPivot&) {
            PivotBreakpoints degenerate;
            degenerate.pivot = pivot;
            degenerate.dimension = data.cols();
            degenerate.degenerate = true;
            major.pivots[pivot] = std::move(degenerate);
        }
    });

    std::vector<double> all{0.0};
    for (const auto& p : major.pivots) {
        for (const auto& c : p.columns) {
            for (const auto& s : c.steps) all.push_back(s.lambda);
        }
    }
    major.lambdas = dedup_breakpoints(std::move(all));
    major.lambdas.push_back(kInfinity);
    return major;
}

SolutionPath merge_path(const MajorBreakpoints& major, const DataMatrix& data) {
    const std::size_t m = data.cols();
    if (major.pivots.size() != m) throw UsageError("breakpoints do not match the data dimension");
    if (major.lambdas.size() < 2 || major.lambdas.front() != 0.0 || major.lambdas.back() != kInfinity) {
        throw UsageError("breakpoint grid must start at 0 and end at infinity");
    }

    const double total_abs = data.abs_sum();
    std::vector<PivotState> state(m);
    std::vector<StepEvent> events;
    for (std::size_t p = 0; p < m; ++p) {
        const auto& pb = major.pivots[p];
        auto& st = state[p];
        st.v.assign(m, 0.0);
        st.v[p] = 1.0;
        if (pb.degenerate) {
            st.intercept = total_abs;
            st.slope = 1.0;
            st.dirty = false;
            continue;
        }
        st.column_errors.resize(pb.columns.size());
        for (std::size_t c = 0; c < pb.columns.size(); ++c) {
            st.column_errors[c] = column_error(data, p, pb.columns[c].target, 0.0);
            for (std::size_t s = 0; s < pb.columns[c].steps.size(); ++s) {
                events.push_back({pb.columns[c].steps[s].lambda, p, c, s});
            }
        }
    }
    std::sort(events.begin(), events.end(), [](const StepEvent& a, const StepEvent& b) {
        return std::tie(a.lambda, a.pivot, a.column, a.step) < std::tie(b.lambda, b.pivot, b.column, b.step);
    });

    struct OpenSegment {
        double lo;
        std::size_t pivot;
        std::size_t version;
        Vector v;
    };
    std::vector<OpenSegment> open;

    std::vector<double> z_lo(m);
    std::vector<std::size_t> candidates;
    std::vector<Piece> emitted;
    std::size_t next_event = 0;

    for (std::size_t k = 0; k + 1 < major.lambdas.size(); ++k) {
        const double a = major.lambdas[k];
        const double b = major.lambdas[k + 1];

        while (next_event < events.size() && events[next_event].lambda <= a + kBreakpointTolerance) {
            const auto& ev = events[next_event++];
            const auto& cb = major.pivots[ev.pivot].columns[ev.column];
            const double value = cb.steps[ev.step].value;
            auto& st = state[ev.pivot];
            if (st.v[cb.target] != value) {
                st.v[cb.target] = value;
                st.column_errors[ev.column] = column_error(data, ev.pivot, cb.target, value);
                ++st.version;
                st.dirty = true;
            }
        }
        for (auto& st : state) {
            if (!st.dirty) continue;
            st.intercept = 0.0;
            for (double e : st.column_errors) st.intercept += e;
            st.slope = l1_norm(st.v);
            st.dirty = false;
        }

        for (std::size_t p = 0; p < m; ++p) z_lo[p] = state[p].z(a);

        // Lines are nondecreasing in lambda, so any line that touches the lower
        // envelope somewhere in [a, b] starts below the envelope's value at b.
        candidates.clear();
        if (b == kInfinity) {
            for (std::size_t p = 0; p < m; ++p) candidates.push_back(p);
        } else {
            double env_b = kInfinity;
            for (const auto& st : state) env_b = std::min(env_b, st.z(b));
            const double slack = 1e-9 * std::max(1.0, std::abs(env_b));
            for (std::size_t p = 0; p < m; ++p) {
                if (z_lo[p] <= env_b + slack) candidates.push_back(p);
            }
        }

        // Crossing offsets: beta_lower is where j drops below every steeper
        // line, beta_upper where a flatter line overtakes j.
        emitted.clear();
        for (std::size_t j : candidates) {
            double beta_lower = -kInfinity;
            double beta_upper = kInfinity;
            std::size_t equal_norm_worse = 0;
            for (std::size_t q = 0; q < m; ++q) {
                if (q == j) continue;
                const double sj = state[j].slope;
                const double sq = state[q].slope;
                if (sj < sq) {
                    beta_lower = std::max(beta_lower, (z_lo[j] - z_lo[q]) / (sq - sj));
                } else if (sj > sq) {
                    beta_upper = std::min(beta_upper, (z_lo[q] - z_lo[j]) / (sj - sq));
                } else if (z_lo[j] > z_lo[q]) {
                    ++equal_norm_worse;
                }
            }
            if (equal_norm_worse != 0) continue;
            if (0.0 < beta_lower && beta_lower < beta_upper && a + beta_lower <= b) {
                emitted.push_back({a + beta_lower, j});
            } else if (beta_lower <= 0.0 && 0.0 < beta_upper) {
                emitted.push_back({a, j});
            }
        }

        std::vector<double> starts{a};
        for (const auto& e : emitted) starts.push_back(e.start);
        starts = dedup_breakpoints(std::move(starts));
        while (starts.size() > 1 && b - starts.back() <= kBreakpointTolerance) starts.pop_back();

        for (std::size_t t = 0; t < starts.size(); ++t) {
            const double lo = starts[t];
            const double hi = t + 1 < starts.size() ? starts[t + 1] : b;
            const double probe = hi == kInfinity ? lo + 1.0 : 0.5 * (lo + hi);
            std::size_t best = candidates.front();
            double best_z = state[best].z(probe);
            for (std::size_t p : candidates) {
                const double zp = state[p].z(probe);
                if (zp < best_z) {
                    best = p;
                    best_z = zp;
                }
            }
            if (!open.empty() && open.back().pivot == best && open.back().version == state[best].version) {
                continue;
            }
            open.push_back({lo, best, state[best].version, state[best].v});
        }
    }

    SolutionPath path;
    path.segments.reserve(open.size());
    for (std::size_t s = 0; s < open.size(); ++s) {
        PathSegment seg;
        seg.lambda_lo = open[s].lo;
        seg.lambda_hi = s + 1 < open.size() ? open[s + 1].lo : kInfinity;
        seg.line = make_line(data, std::move(open[s].v), open[s].pivot, seg.lambda_lo);
        seg.z_lo = seg.line.objective;
        seg.z_hi = seg.lambda_hi == kInfinity ? kInfinity : seg.line.objective_at(seg.lambda_hi);
        path.breakpoints.push_back(seg.lambda_lo);
        path.segments.push_back(std::move(seg));
    }
    return path;
}

SolutionPath solution_path(const DataMatrix& data, Parallelism parallelism) {
    return merge_path(major_breakpoints(data, parallelism), data);
}

}  // namespace l1line
