#include "l1line/fit.hpp"

#include <cassert>
#include <cmath>
#include <vector>

#include "l1line/errors.hpp"
#include "l1line/ratio_engine.hpp"

namespace l1line {

void check_lambda(double lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw UsageError("lambda must be a finite nonnegative number");
    }
}

double solve_column(const RatioColumn& col, double lambda) {
    double value = 0.0;
#ifndef NDEBUG
    std::size_t matches = 0;
#endif
    for (std::size_t k = 0; k < col.size(); ++k) {
        const double ratio = col.entries[k].ratio;
        const double signed_lambda = ratio_sign(ratio) * lambda;
        const Window w = window_bounds(col, k);
        if (signed_lambda > w.lower && signed_lambda <= w.upper) {
#ifdef NDEBUG
            return ratio;
#else
            if (matches++ == 0) value = ratio;
#endif
        }
    }
    // Windows of same-sign positions tile without overlap.
    assert(matches <= 1);
    return value;
}

FittedLine fit_for_pivot(const DataMatrix& data, std::size_t pivot, double lambda) {
    check_lambda(lambda);
    if (pivot >= data.cols()) throw UsageError("pivot out of range");
    const std::size_t m = data.cols();
    Vector v(m, 0.0);
    v[pivot] = 1.0;
    // Every point projects to the origin; the other coordinates only add penalty.
    if (!pivot_has_support(data, pivot)) return make_line(data, std::move(v), pivot, lambda);

    RatioColumn col;
    for (std::size_t j = 0; j < m; ++j) {
        if (j == pivot) continue;
        build_column_into(data, pivot, j, col);
        v[j] = solve_column(col, lambda);
    }
    return make_line(data, std::move(v), pivot, lambda);
}

FittedLine fit_line(const DataMatrix& data, double lambda, Parallelism parallelism) {
    check_lambda(lambda);
    std::vector<FittedLine> per_pivot(data.cols());
    parallel_for(data.cols(), parallelism,
                 [&](std::size_t pivot) { per_pivot[pivot] = fit_for_pivot(data, pivot, lambda); });

    std::size_t best = 0;
    for (std::size_t pivot = 1; pivot < per_pivot.size(); ++pivot) {
        if (per_pivot[pivot].objective < per_pivot[best].objective) best = pivot;
    }
    return std::move(per_pivot[best]);
}

}  // namespace l1line
