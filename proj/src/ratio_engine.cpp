#include "l1line/ratio_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "l1line/errors.hpp"

namespace l1line {

bool pivot_has_support(const DataMatrix& data, std::size_t pivot) noexcept {
    for (std::size_t i = 0; i < data.rows(); ++i) {
        if (data(i, pivot) != 0.0) return true;
    }
    return false;
}

void build_column_into(const DataMatrix& data, std::size_t pivot, std::size_t target, RatioColumn& out) {
    if (pivot >= data.cols() || target >= data.cols()) throw UsageError("column index out of range");
    if (pivot == target) throw UsageError("target column must differ from the pivot");

    out.pivot = pivot;
    out.target = target;
    out.entries.clear();
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const double alpha = data(i, pivot);
        if (alpha == 0.0) continue;
        out.entries.push_back({data(i, target) / alpha, std::abs(alpha), i});
    }
    if (out.entries.empty()) {
        throw EmptyPivot("column " + std::to_string(pivot) + " is identically zero");
    }

    std::sort(out.entries.begin(), out.entries.end(), [](const RatioEntry& a, const RatioEntry& b) {
        return a.ratio < b.ratio || (a.ratio == b.ratio && a.source_row < b.source_row);
    });

    out.prefix_weights.resize(out.entries.size());
    double running = 0.0;
    for (std::size_t k = 0; k < out.entries.size(); ++k) {
        running += out.entries[k].weight;
        out.prefix_weights[k] = running;
    }
    out.total_weight = running;
}

RatioColumn build_column(const DataMatrix& data, std::size_t pivot, std::size_t target) {
    RatioColumn col;
    build_column_into(data, pivot, target, col);
    return col;
}

Window window_bounds(const RatioColumn& col, std::size_t k) {
    const double total = col.total_weight;
    const double at_or_below = col.prefix_weights[k];
    const double below = k == 0 ? 0.0 : col.prefix_weights[k - 1];
    // S_above - S_at_or_below = (T - P[k]) - P[k]; likewise for the upper end.
    return {(total - at_or_below) - at_or_below, (total - below) - below};
}

}  // namespace l1line
