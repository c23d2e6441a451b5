#pragma once

#include <cstddef>

#include "l1line/core.hpp"
#include "l1line/parallel.hpp"

namespace l1line {

/// Optimal v_j for one sorted ratio column: the ratio at the position whose
/// window (lower, upper] contains sgn(ratio) * lambda, or 0 if none does.
double solve_column(const RatioColumn& col, double lambda);

/// Best line with v[pivot] fixed to 1. If the pivot column is all zeros every
/// point projects to the origin and the result is the unit vector e_pivot
/// (objective = sum |x_ij| + lambda).
FittedLine fit_for_pivot(const DataMatrix& data, std::size_t pivot, double lambda);

/// Minimum-objective line over every preserved coordinate; ties go to the
/// smallest coordinate. Pivots are fitted concurrently; the result does not
/// depend on the thread count.
FittedLine fit_line(const DataMatrix& data, double lambda, Parallelism parallelism = {});

/// Throws UsageError unless lambda is finite and nonnegative.
void check_lambda(double lambda);

}  // namespace l1line
