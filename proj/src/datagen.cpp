#include "l1line/datagen.hpp"

#include <cmath>

#include "l1line/errors.hpp"

namespace l1line {

double Sampler::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::laplace(double scale) {
    for (;;) {
        const double u = unit() - 0.5;
        const double tail = 1.0 - 2.0 * std::abs(u);
        if (tail <= 0.0) continue;  // u == -1/2 maps to an infinite draw
        const double magnitude = -scale * std::log(tail);
        return u < 0.0 ? -magnitude : magnitude;
    }
}

namespace {

Vector random_unit_direction(Sampler& rng, std::size_t m, double coord_range) {
    Vector v(m);
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& x : v) {
            x = rng.uniform(-coord_range, coord_range);
            norm += x * x;
        }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
    return v;
}

void check_shape(std::size_t m, std::size_t n) {
    if (m < 2) throw UsageError("need at least two features");
    if (n < 1) throw UsageError("need at least one observation");
}

}  // namespace

Synthetic gen_line_data(std::size_t m, std::size_t n, std::uint64_t seed, double noise_scale, double coef_range) {
    check_shape(m, n);
    if (!(noise_scale >= 0.0) || !(coef_range > 0.0)) throw UsageError("noise must be >= 0 and range > 0");

    Sampler rng(seed);
    Vector v = random_unit_direction(rng, m, 1.0);
    std::vector<double> values(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const double alpha = rng.uniform(-coef_range, coef_range);
        for (std::size_t j = 0; j < m; ++j) {
            double x = alpha * v[j];
            if (noise_scale > 0.0) x += rng.laplace(noise_scale);
            values[i * m + j] = x;
        }
    }
    return {DataMatrix(n, m, std::move(values)), std::move(v), {}};
}

Synthetic gen_outlier_data(std::size_t m, std::size_t n, std::size_t n_outliers, std::uint64_t seed) {
    check_shape(m, n);
    if (n_outliers > n) throw UsageError("more outliers than observations");
    if (n_outliers > 0 && m < 5) throw UsageError("outliers need at least five features");

    Sampler rng(seed);
    Vector v = random_unit_direction(rng, m, 10.0);
    std::vector<double> values(n * m);
    std::vector<std::size_t> outliers;
    const std::size_t first_outlier = n - n_outliers;
    for (std::size_t i = 0; i < n; ++i) {
        double* row = values.data() + i * m;
        if (i < first_outlier) {
            const double alpha = rng.uniform(-100.0, 100.0);
            for (std::size_t j = 0; j < m; ++j) row[j] = alpha * v[j] + rng.laplace(10.0);
        } else {
            outliers.push_back(i);
            for (std::size_t j = 0; j < m; ++j) {
                row[j] = (j < 5 ? rng.uniform(50.0, 100.0) : 0.0) + rng.laplace(1.0);
            }
        }
    }
    return {DataMatrix(n, m, std::move(values)), std::move(v), std::move(outliers)};
}

}  // namespace l1line
