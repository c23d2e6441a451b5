#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "l1line/core.hpp"
#include "l1line/parallel.hpp"

namespace l1line::oracle {

struct ColumnOptimum {
    double value = 0.0;
    double objective = 0.0;
};

/// Minimizes f(t) = sum_i |x_ij - t x_i,pivot| + lambda |t| by evaluating f
/// at every kink ({0} and each ratio). f is convex and piecewise linear with
/// kinks only there, so the minimum is one of them. Smallest t wins ties.
ColumnOptimum brute_force_column(const DataMatrix& data, std::size_t pivot, std::size_t target, double lambda);

/// brute_force_column for every target, assembled into a line with
/// v[pivot] = 1 (e_pivot if the pivot column is all zeros).
FittedLine brute_force_pivot(const DataMatrix& data, std::size_t pivot, double lambda);

/// Minimum of brute_force_pivot over all pivots (smallest pivot on ties).
FittedLine brute_force_line(const DataMatrix& data, double lambda);

/// Builds dual multipliers (pi, gamma) for the column subproblem at the claimed
/// optimum `value` and checks dual feasibility, complementary slackness and
/// strong duality. Throws OptimalityRefuted naming the violated condition.
DualCertificate dual_certificate(const RatioColumn& col, double value, double lambda);

struct SweepReport {
    std::size_t grid_size = 0;
    double lambda_hi = 0.0;
    double max_fit_discrepancy = 0.0;    ///< path vs fit_line
    double max_brute_discrepancy = 0.0;  ///< path vs brute force
    double worst_lambda = 0.0;
    std::size_t failures = 0;            ///< grid points above tolerance
    double tolerance = 1e-9;

    double max_discrepancy() const noexcept { return std::max(max_fit_discrepancy, max_brute_discrepancy); }
    bool ok() const noexcept { return failures == 0; }
};

/// Samples grid_size penalties evenly over [0, 1.1 * largest breakpoint] and
/// compares the path objective to fit_line and to the brute-force optimum.
SweepReport sweep_validate(const DataMatrix& data, const SolutionPath& path, std::size_t grid_size,
                           double tolerance = 1e-9, Parallelism parallelism = {});

struct PathShapeReport {
    bool tiles = true;                ///< starts at 0, contiguous, ends at +inf
    bool continuous = true;           ///< z_hi of each segment == z_lo of the next
    bool concave = true;              ///< penalty_norm (slope) nonincreasing
    bool terminal_unit = true;        ///< last v is a unit coordinate vector
    double max_jump = 0.0;
    double max_slope_increase = 0.0;
    std::string detail;

    bool ok() const noexcept { return tiles && continuous && concave && terminal_unit; }
};

/// Structural checks on a path: tiling of [0, inf), continuity of z within
/// continuity_tol (relative), slopes nonincreasing within slope_tol.
PathShapeReport check_path_shape(const SolutionPath& path, double continuity_tol = 1e-9, double slope_tol = 1e-12);

/// |a - b| / max(|a|, |b|, 1); objectives below 1 are compared absolutely.
double relative_gap(double a, double b) noexcept;

}  // namespace l1line::oracle
