#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "l1line/core.hpp"

namespace l1line {

/// Synthetic data set and the direction it was generated from.
struct Synthetic {
    DataMatrix data;
    Vector v_true;                          ///< unit l2 norm
    std::vector<std::size_t> outlier_rows;  ///< empty for clean data
};

/// Portable sampler on top of std::mt19937_64 (whose output sequence is fixed
/// by the standard). Floats are built from the top 53 bits, so identical seeds
/// give bit-identical draws on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double unit();
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    /// Laplace(0, scale) by inverse CDF: -scale * sgn(u) * ln(1 - 2|u|), u ~ U(-1/2, 1/2).
    double laplace(double scale);

private:
    std::mt19937_64 engine_;
};

/// Points alpha_i * v_true plus Laplace(0, noise_scale) noise on every
/// coordinate. v_true coordinates ~ U(-1, 1) then l2-normalized;
/// alpha_i ~ U(-coef_range, coef_range). noise_scale = 0 gives exact points.
Synthetic gen_line_data(std::size_t m, std::size_t n, std::uint64_t seed, double noise_scale = 0.0,
                        double coef_range = 100.0);

/// Inliers: v_true coords ~ U(-10, 10) normalized, alpha ~ U(-100, 100),
/// Laplace(0, 10) noise. The last n_outliers rows are outliers: first five
/// coordinates ~ U(50, 100) + Laplace(0, 1), remaining coordinates Laplace(0, 1).
Synthetic gen_outlier_data(std::size_t m, std::size_t n, std::size_t n_outliers, std::uint64_t seed);

}  // namespace l1line
