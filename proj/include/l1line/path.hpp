#pragma once

#include <cstddef>
#include <vector>

#include "l1line/core.hpp"
#include "l1line/parallel.hpp"

namespace l1line {

/// Breakpoints closer than this (absolute) collapse into one.
inline constexpr double kBreakpointTolerance = 1e-9;

/// v_j takes `value` from `lambda` up to the next step.
struct ColumnStep {
    double lambda = 0.0;
    double value = 0.0;

    bool operator==(const ColumnStep&) const = default;
};

/// Piecewise-constant v_j(lambda) for one target column. The last step is
/// always (lambda_max, 0).
struct ColumnBreakpoints {
    std::size_t target = 0;
    std::vector<ColumnStep> steps;
    double lambda_max = 0.0;

    double value_at(double lambda) const;
};

/// All major breakpoints for one preserved coordinate.
struct PivotBreakpoints {
    std::size_t pivot = 0;
    std::size_t dimension = 0;
    bool degenerate = false;                  ///< pivot column identically zero
    std::vector<ColumnBreakpoints> columns;   ///< ascending target, pivot skipped

    /// Positive step locations plus every column's lambda_max, deduplicated.
    std::vector<double> breakpoint_set() const;

    /// v^pivot(lambda) assembled from the column steps.
    Vector solution_at(double lambda) const;
};

/// Merged breakpoint grid over every pivot plus the per-pivot solutions.
struct MajorBreakpoints {
    std::vector<double> lambdas;  ///< ascending; starts at 0 and ends with +inf
    std::vector<PivotBreakpoints> pivots;

    Vector solution(std::size_t pivot, double lambda) const { return pivots.at(pivot).solution_at(lambda); }
    std::size_t finite_count() const noexcept { return lambdas.empty() ? 0 : lambdas.size() - 1; }
};

/// Per-column breakpoints for one pivot. Throws EmptyPivot if the pivot column
/// is identically zero.
PivotBreakpoints pivot_breakpoints(const DataMatrix& data, std::size_t pivot);

/// Breakpoints for every pivot (concurrently) merged into one sorted grid.
MajorBreakpoints major_breakpoints(const DataMatrix& data, Parallelism parallelism = {});

/// Lower envelope over pivots, interval by interval, including the crossing
/// points between pivots that the per-pivot grid does not contain.
SolutionPath merge_path(const MajorBreakpoints& major, const DataMatrix& data);

/// major_breakpoints followed by merge_path.
SolutionPath solution_path(const DataMatrix& data, Parallelism parallelism = {});

/// Sorts and collapses values closer than kBreakpointTolerance, keeping the
/// first of each cluster.
std::vector<double> dedup_breakpoints(std::vector<double> values);

}  // namespace l1line
