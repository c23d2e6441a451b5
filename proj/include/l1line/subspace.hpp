#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "l1line/core.hpp"
#include "l1line/parallel.hpp"

namespace l1line {

/// Rows of data projected onto the orthogonal complement of span{v}:
/// X (I - w w^T) with w = v / ||v||_2. Throws UsageError for v = 0.
DataMatrix deflate(const DataMatrix& data, std::span<const double> v);

struct SubspaceFit {
    std::vector<FittedLine> components;
    /// Fitting stopped before k components because the deflated data vanished.
    bool degenerate = false;
};

/// k successive components: fit_line, deflate, repeat.
SubspaceFit fit_subspace(const DataMatrix& data, double lambda, std::size_t k, Parallelism parallelism = {});

/// Sine of the angle between two directions, in [0, 1]. Invariant to sign
/// flips and positive scaling of either argument.
double discordance(std::span<const double> v_true, std::span<const double> v_est);

/// Fraction of coordinates with |v_j| > tol.
double l0_fraction(std::span<const double> v, double tol = 1e-9);

}  // namespace l1line
