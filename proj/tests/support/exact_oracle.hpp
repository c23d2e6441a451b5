#pragma once

// Exact-arithmetic reference for integer-valued data. Independent of the
// library: no ratio sorting, no window tests, just candidate enumeration over
// rationals.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace exact {

using Q = boost::rational<std::int64_t>;
using Matrix = std::vector<std::vector<std::int64_t>>;

inline Q qabs(Q x) { return x < Q(0) ? -x : x; }

/// g(t) = sum_i |x_ij - t x_ip|
inline Q column_error(const Matrix& x, std::size_t p, std::size_t j, Q t) {
    Q s = 0;
    for (const auto& row : x) s += qabs(Q(row[j]) - t * Q(row[p]));
    return s;
}

inline std::vector<Q> candidates(const Matrix& x, std::size_t p, std::size_t j) {
    std::set<Q> c{Q(0)};
    for (const auto& row : x) {
        if (row[p] != 0) c.insert(Q(row[j], row[p]));
    }
    return {c.begin(), c.end()};
}

/// Smallest minimizer of g(t) + lambda |t|.
inline Q column_optimum(const Matrix& x, std::size_t p, std::size_t j, Q lambda) {
    Q best_t = 0;
    bool first = true;
    Q best_f = 0;
    for (Q t : candidates(x, p, j)) {
        const Q f = column_error(x, p, j, t) + lambda * qabs(t);
        if (first || f < best_f) {
            best_f = f;
            best_t = t;
            first = false;
        }
    }
    return best_t;
}

struct Line {
    std::vector<Q> v;
    Q error = 0;
    Q norm = 0;
    Q z = 0;
    std::size_t pivot = 0;
};

inline Line pivot_line(const Matrix& x, std::size_t p, Q lambda) {
    const std::size_t m = x.front().size();
    Line line;
    line.pivot = p;
    line.v.assign(m, Q(0));
    bool support = false;
    for (const auto& row : x) support = support || row[p] != 0;
    line.v[p] = 1;
    for (std::size_t j = 0; j < m && support; ++j) {
        if (j != p) line.v[j] = column_optimum(x, p, j, lambda);
    }
    for (const auto& row : x) {
        for (std::size_t j = 0; j < m; ++j) line.error += qabs(Q(row[j]) - line.v[j] * Q(row[p]));
    }
    for (Q c : line.v) line.norm += qabs(c);
    line.z = line.error + lambda * line.norm;
    return line;
}

inline Line best_line(const Matrix& x, Q lambda) {
    Line best = pivot_line(x, 0, lambda);
    for (std::size_t p = 1; p < x.front().size(); ++p) {
        Line cand = pivot_line(x, p, lambda);
        if (cand.z < best.z) best = cand;
    }
    return best;
}

/// Smallest lambda >= 0 beyond which t = 0 stays optimal for column j.
inline Q zero_crossing(const Matrix& x, std::size_t p, std::size_t j) {
    const Q g0 = column_error(x, p, j, 0);
    Q out = 0;
    for (Q t : candidates(x, p, j)) {
        if (t == Q(0)) continue;
        out = std::max(out, (g0 - column_error(x, p, j, t)) / qabs(t));
    }
    return out;
}

/// Positive lambdas where some column's optimum changes, plus each column's
/// zero crossing. Changes are located by testing every pairwise tie point of
/// the candidate objectives.
inline std::set<Q> pivot_breakpoints(const Matrix& x, std::size_t p) {
    const std::size_t m = x.front().size();
    std::set<Q> out;
    for (std::size_t j = 0; j < m; ++j) {
        if (j == p) continue;
        const auto cand = candidates(x, p, j);
        std::set<Q> ties;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                const Q da = qabs(cand[a]);
                const Q db = qabs(cand[b]);
                if (da == db) continue;
                const Q lam = (column_error(x, p, j, cand[a]) - column_error(x, p, j, cand[b])) / (db - da);
                if (lam > Q(0)) ties.insert(lam);
            }
        }
        std::vector<Q> sorted(ties.begin(), ties.end());
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            const Q lo = k == 0 ? sorted[k] / 2 : (sorted[k - 1] + sorted[k]) / 2;
            const Q hi = k + 1 < sorted.size() ? (sorted[k] + sorted[k + 1]) / 2 : sorted[k] + 1;
            if (column_optimum(x, p, j, lo) != column_optimum(x, p, j, hi)) out.insert(sorted[k]);
        }
        out.insert(zero_crossing(x, p, j));
    }
    return out;
}

inline double to_double(Q q) { return boost::rational_cast<double>(q); }

}  // namespace exact
