#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "l1line/core.hpp"
#include "support/exact_oracle.hpp"

namespace fixtures {

inline const exact::Matrix kToy = {
    {4, -2, 3, -6}, {-3, 4, 2, -1}, {2, 3, -3, -2}, {-3, 4, 2, 3}, {5, 3, 2, -1}};

inline l1line::DataMatrix to_data(const exact::Matrix& x) {
    std::vector<std::vector<double>> rows;
    for (const auto& r : x) rows.emplace_back(r.begin(), r.end());
    return l1line::DataMatrix::from_rows(rows);
}

inline l1line::DataMatrix toy() { return to_data(kToy); }

/// Entries U(lo, hi).
inline l1line::DataMatrix random_data(std::mt19937_64& rng, std::size_t n, std::size_t m, double lo = -10.0,
                                      double hi = 10.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> values(n * m);
    for (double& x : values) x = u(rng);
    return l1line::DataMatrix(n, m, std::move(values));
}

/// Small integers, so ties, zero ratios and zero pivots all occur.
inline exact::Matrix random_integer_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m, int range = 4) {
    std::uniform_int_distribution<int> u(-range, range);
    exact::Matrix x(n, std::vector<std::int64_t>(m));
    for (auto& row : x) {
        for (auto& v : row) v = u(rng);
    }
    return x;
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace fixtures
