#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace l1line {

using Vector = std::vector<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Dense row-major n x m matrix of finite reals: rows are observations,
/// columns are features. Immutable once built.
class DataMatrix {
public:
    DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
               std::vector<std::string> feature_names = {});

    /// Builds from nested rows; all rows must have the same length.
    static DataMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return values_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const noexcept {
        return {values_.data() + i * cols_, cols_};
    }
    std::span<const double> values() const noexcept { return values_; }

    /// Empty unless the matrix was read with a header line.
    const std::vector<std::string>& feature_names() const noexcept { return names_; }

    /// Sum of |x_ij| over the whole matrix.
    double abs_sum() const noexcept;

    bool operator==(const DataMatrix& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_ && values_ == other.values_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
    std::vector<std::string> names_;
};

/// A line through the origin with direction v and preserved coordinate.
/// v[preserved] == 1 for every fitted line; an all-zero v only arises from
/// hand-built input.
struct FittedLine {
    Vector v;
    std::size_t preserved = 0;
    double error = 0.0;         ///< sum_i sum_j |x_ij - v_j x_i,preserved|
    double penalty_norm = 0.0;  ///< ||v||_1
    double objective = 0.0;     ///< error + lambda * penalty_norm
    double lambda = 0.0;

    bool degenerate() const noexcept { return penalty_norm == 0.0; }

    /// Objective of this fixed line at another penalty value.
    double objective_at(double penalty) const noexcept { return error + penalty * penalty_norm; }

    bool operator==(const FittedLine&) const = default;
};

/// One sorted ratio x_ij / x_i,pivot with its weight |x_i,pivot|.
struct RatioEntry {
    double ratio = 0.0;
    double weight = 0.0;
    std::size_t source_row = 0;
};

/// Ratios of a target column against a pivot column, sorted ascending with
/// ties broken by source row. Rows with a zero pivot entry are excluded.
struct RatioColumn {
    std::size_t pivot = 0;
    std::size_t target = 0;
    std::vector<RatioEntry> entries;
    std::vector<double> prefix_weights;  ///< prefix_weights[k] = sum_{t<=k} weight[t]
    double total_weight = 0.0;

    std::size_t size() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }
};

/// The optimal line on the half-open interval [lambda_lo, lambda_hi).
struct PathSegment {
    double lambda_lo = 0.0;
    double lambda_hi = kInfinity;
    FittedLine line;
    double z_lo = 0.0;
    double z_hi = kInfinity;

    bool operator==(const PathSegment&) const = default;
};

/// Piecewise-constant solution path tiling [0, inf).
struct SolutionPath {
    std::vector<PathSegment> segments;
    std::vector<double> breakpoints;  ///< lambda_lo of every segment, ascending

    /// Index of the segment covering lambda (right-continuous at breakpoints).
    std::size_t segment_index(double lambda) const;
    const PathSegment& segment_at(double lambda) const { return segments[segment_index(lambda)]; }
    double objective_at(double lambda) const { return segment_at(lambda).line.objective_at(lambda); }

    bool operator==(const SolutionPath&) const = default;
};

/// Dual multipliers proving one column value optimal for its 1-D subproblem.
struct DualCertificate {
    std::vector<double> pi;  ///< aligned with the RatioColumn's sorted entries
    double gamma = 0.0;
    std::size_t column = 0;
    std::size_t pivot = 0;
    double lambda = 0.0;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
};

/// sum_i sum_j |x_ij - v_j x_i,preserved|, summed row-major.
double residual_error(const DataMatrix& data, std::span<const double> v, std::size_t preserved);

double l1_norm(std::span<const double> v) noexcept;

/// Assembles a FittedLine with error, penalty and objective filled in.
FittedLine make_line(const DataMatrix& data, Vector v, std::size_t preserved, double lambda);

}  // namespace l1line
