#pragma once

#include <cstddef>
#include <utility>

#include "l1line/core.hpp"

namespace l1line {

/// Half-open membership window (lower, upper] for sorted position k.
struct Window {
    double lower = 0.0;
    double upper = 0.0;
};

/// Sorts the ratios x_ij / x_i,pivot of the rows whose pivot entry is nonzero.
/// Throws EmptyPivot if the pivot column is identically zero.
RatioColumn build_column(const DataMatrix& data, std::size_t pivot, std::size_t target);

/// Same as build_column but reuses the storage already held by `out`.
void build_column_into(const DataMatrix& data, std::size_t pivot, std::size_t target, RatioColumn& out);

/// True if at least one row has a nonzero entry in `pivot`.
bool pivot_has_support(const DataMatrix& data, std::size_t pivot) noexcept;

/// (S_above - S_at_or_below, S_at_or_above - S_below) at sorted position k,
/// in O(1) from the prefix sums. upper(k + 1) == lower(k) holds bit-exactly.
Window window_bounds(const RatioColumn& col, std::size_t k);

/// Sign used in the membership test; zero counts as positive.
inline double ratio_sign(double ratio) noexcept { return ratio >= 0.0 ? 1.0 : -1.0; }

}  // namespace l1line
