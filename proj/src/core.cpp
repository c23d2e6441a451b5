#include "l1line/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "l1line/errors.hpp"

namespace l1line {

DataMatrix::DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                       std::vector<std::string> feature_names)
    : rows_(rows), cols_(cols), values_(std::move(values)), names_(std::move(feature_names)) {
    if (rows_ < 1) throw UsageError("data matrix needs at least one row");
    if (cols_ < 2) throw UsageError("data matrix needs at least two columns");
    if (values_.size() != rows_ * cols_) {
        throw UsageError("data matrix expects " + std::to_string(rows_ * cols_) + " values, got " +
                         std::to_string(values_.size()));
    }
    if (!names_.empty() && names_.size() != cols_) {
        throw UsageError("feature name count does not match column count");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            throw UsageError("non-finite entry at row " + std::to_string(k / cols_) + ", column " +
                             std::to_string(k % cols_));
        }
    }
}

DataMatrix DataMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw UsageError("data matrix needs at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<double> values;
    values.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw UsageError("ragged rows in data matrix");
        values.insert(values.end(), r.begin(), r.end());
    }
    return DataMatrix(rows.size(), cols, std::move(values));
}

double DataMatrix::abs_sum() const noexcept {
    double s = 0.0;
    for (double x : values_) s += std::abs(x);
    return s;
}

std::size_t SolutionPath::segment_index(double lambda) const {
    if (segments.empty()) throw UsageError("empty solution path");
    if (lambda < 0.0) throw UsageError("lambda must be nonnegative");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), lambda);
    return it == breakpoints.begin() ? 0 : static_cast<std::size_t>(it - breakpoints.begin()) - 1;
}

double residual_error(const DataMatrix& data, std::span<const double> v, std::size_t preserved) {
    if (v.size() != data.cols()) {
        throw UsageError("direction has length " + std::to_string(v.size()) + ", data has " +
                         std::to_string(data.cols()) + " columns");
    }
    if (preserved >= data.cols()) throw UsageError("preserved coordinate out of range");
    double total = 0.0;
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const auto x = data.row(i);
        const double alpha = x[preserved];
        for (std::size_t j = 0; j < x.size(); ++j) total += std::abs(x[j] - v[j] * alpha);
    }
    return total;
}

double l1_norm(std::span<const double> v) noexcept {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

FittedLine make_line(const DataMatrix& data, Vector v, std::size_t preserved, double lambda) {
    FittedLine line;
    line.error = residual_error(data, v, preserved);
    line.penalty_norm = l1_norm(v);
    line.objective = line.error + lambda * line.penalty_norm;
    line.lambda = lambda;
    line.preserved = preserved;
    line.v = std::move(v);
    return line;
}

}  // namespace l1line
