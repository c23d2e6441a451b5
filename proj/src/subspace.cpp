#include "l1line/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "l1line/errors.hpp"
#include "l1line/fit.hpp"

namespace l1line {

namespace {

double norm2(std::span<const double> v) {
    // Scaled accumulation avoids overflow for large coordinates.
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return 0.0;
    double s = 0.0;
    for (double x : v) s += (x / scale) * (x / scale);
    return scale * std::sqrt(s);
}

}  // namespace

DataMatrix deflate(const DataMatrix& data, std::span<const double> v) {
    if (v.size() != data.cols()) throw UsageError("direction length does not match data columns");
    const double nv = norm2(v);
    if (nv == 0.0) throw UsageError("cannot deflate along the zero vector");

    std::vector<double> w(v.begin(), v.end());
    for (double& x : w) x /= nv;

    std::vector<double> out(data.values().begin(), data.values().end());
    const std::size_t m = data.cols();
    for (std::size_t i = 0; i < data.rows(); ++i) {
        double* row = out.data() + i * m;
        double dot = 0.0;
        for (std::size_t j = 0; j < m; ++j) dot += row[j] * w[j];
        for (std::size_t j = 0; j < m; ++j) row[j] -= dot * w[j];
        // One refinement pass keeps rows orthogonal to v at full precision.
        double resid = 0.0;
        for (std::size_t j = 0; j < m; ++j) resid += row[j] * w[j];
        for (std::size_t j = 0; j < m; ++j) row[j] -= resid * w[j];
    }
    return DataMatrix(data.rows(), m, std::move(out), data.feature_names());
}

SubspaceFit fit_subspace(const DataMatrix& data, double lambda, std::size_t k, Parallelism parallelism) {
    if (k < 1 || k >= data.cols()) throw UsageError("component count must be in [1, m)");
    check_lambda(lambda);

    double original_scale = 0.0;
    for (double x : data.values()) original_scale = std::max(original_scale, std::abs(x));

    SubspaceFit result;
    DataMatrix current = data;
    for (std::size_t c = 0; c < k; ++c) {
        if (c > 0) {
            double scale = 0.0;
            for (double x : current.values()) scale = std::max(scale, std::abs(x));
            if (scale <= 1e-10 * original_scale) {
                result.degenerate = true;
                break;
            }
        }
        FittedLine line = fit_line(current, lambda, parallelism);
        if (c + 1 < k) current = deflate(current, line.v);
        result.components.push_back(std::move(line));
    }
    return result;
}

double discordance(std::span<const double> v_true, std::span<const double> v_est) {
    if (v_true.size() != v_est.size()) throw UsageError("discordance needs vectors of equal length");
    const double na = norm2(v_true);
    const double nb = norm2(v_est);
    if (na == 0.0 || nb == 0.0) throw UsageError("discordance of a zero vector is undefined");

    double dot = 0.0;
    for (std::size_t j = 0; j < v_true.size(); ++j) dot += (v_true[j] / na) * (v_est[j] / nb);
    const double flip = dot < 0.0 ? -1.0 : 1.0;

    // sin(theta) = |u - w| |u + w| / 2 for unit u, w; accurate for tiny angles
    // where sqrt(1 - cos^2) loses everything to cancellation.
    double diff = 0.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < v_true.size(); ++j) {
        const double u = v_true[j] / na;
        const double w = flip * v_est[j] / nb;
        diff += (u - w) * (u - w);
        sum += (u + w) * (u + w);
    }
    return std::clamp(0.5 * std::sqrt(diff) * std::sqrt(sum), 0.0, 1.0);
}

double l0_fraction(std::span<const double> v, double tol) {
    if (v.empty()) return 0.0;
    if (tol < 0.0) throw UsageError("l0 tolerance must be nonnegative");
    std::size_t count = 0;
    for (double x : v) count += std::abs(x) > tol ? 1 : 0;
    return static_cast<double>(count) / static_cast<double>(v.size());
}

}  // namespace l1line
