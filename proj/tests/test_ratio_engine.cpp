#include <gtest/gtest.h>

#include <random>

#include "l1line/errors.hpp"
#include "l1line/ratio_engine.hpp"
#include "support/fixtures.hpp"

namespace {

using l1line::build_column;
using l1line::window_bounds;

TEST(BuildColumn, ToyPivotFourTargetOne) {
    const auto col = build_column(fixtures::toy(), 3, 0);
    ASSERT_EQ(col.size(), 5u);
    const double ratios[] = {-5.0, -1.0, -1.0, -2.0 / 3, 3.0};
    const double weights[] = {1, 2, 3, 6, 1};
    const std::size_t rows[] = {4, 2, 3, 0, 1};
    for (std::size_t k = 0; k < 5; ++k) {
        EXPECT_DOUBLE_EQ(col.entries[k].ratio, ratios[k]);
        EXPECT_EQ(col.entries[k].weight, weights[k]);
        EXPECT_EQ(col.entries[k].source_row, rows[k]);
    }
    EXPECT_EQ(col.total_weight, 13.0);
    EXPECT_EQ(col.prefix_weights.back(), 13.0);
}

TEST(BuildColumn, SingleRow) {
    const auto d = l1line::DataMatrix(1, 2, {2.0, 5.0});
    const auto col = build_column(d, 0, 1);
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(col.entries[0].ratio, 2.5);
    EXPECT_EQ(col.entries[0].weight, 2.0);
}

TEST(BuildColumn, SkipsZeroPivotRows) {
    const auto d = l1line::DataMatrix::from_rows({{0.0, 1.0}, {2.0, 1.0}, {0.0, -4.0}});
    const auto col = build_column(d, 0, 1);
    ASSERT_EQ(col.size(), 1u);
    EXPECT_EQ(col.entries[0].source_row, 1u);
}

TEST(BuildColumn, ErrorsOnEmptyPivotAndSelfTarget) {
    const auto d = l1line::DataMatrix::from_rows({{0.0, 1.0}, {0.0, 2.0}});
    EXPECT_THROW(build_column(d, 0, 1), l1line::EmptyPivot);
    EXPECT_THROW(build_column(fixtures::toy(), 1, 1), l1line::UsageError);
    EXPECT_FALSE(l1line::pivot_has_support(d, 0));
    EXPECT_TRUE(l1line::pivot_has_support(d, 1));
}

TEST(WindowBounds, UnitWeights) {
    const auto d = l1line::DataMatrix::from_rows({{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}});
    const auto col = build_column(d, 0, 1);
    const auto w = window_bounds(col, 1);
    EXPECT_EQ(w.lower, -1.0);
    EXPECT_EQ(w.upper, 1.0);
    EXPECT_EQ(window_bounds(col, 0).lower, 1.0);
    EXPECT_EQ(window_bounds(col, 2).upper, -1.0);
}

TEST(WindowBounds, RatioSignCountsZeroAsPositive) {
    EXPECT_EQ(l1line::ratio_sign(0.0), 1.0);
    EXPECT_EQ(l1line::ratio_sign(-0.0), 1.0);
    EXPECT_EQ(l1line::ratio_sign(-1e-300), -1.0);
}

// Windows of consecutive positions share an endpoint exactly, span 2 w_k, and
// stay inside [-T, T].
TEST(WindowBounds, ContiguityWidthAndRangeProperty) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = fixtures::uniform_index(rng, 1, 40);
        const auto d = fixtures::random_data(rng, n, 2, -1e3, 1e3);
        const auto col = build_column(d, 0, 1);
        const double t = col.total_weight;
        for (std::size_t k = 0; k < col.size(); ++k) {
            const auto w = window_bounds(col, k);
            EXPECT_NEAR(w.upper - w.lower, 2.0 * col.entries[k].weight, 1e-9 * t);
            EXPECT_GE(w.lower, -t * (1 + 1e-12));
            EXPECT_LE(w.upper, t * (1 + 1e-12));
            if (k + 1 < col.size()) {
                EXPECT_EQ(window_bounds(col, k + 1).upper, w.lower) << "trial " << trial << " k " << k;
            }
        }
    }
}

TEST(BuildColumn, TiesOrderedBySourceRow) {
    const auto d = l1line::DataMatrix::from_rows({{2.0, 2.0}, {1.0, 1.0}, {-3.0, -3.0}, {1.0, 0.0}});
    const auto col = build_column(d, 0, 1);
    ASSERT_EQ(col.size(), 4u);
    EXPECT_EQ(col.entries[0].source_row, 3u);
    EXPECT_EQ(col.entries[1].source_row, 0u);
    EXPECT_EQ(col.entries[2].source_row, 1u);
    EXPECT_EQ(col.entries[3].source_row, 2u);
}

TEST(BuildColumnInto, MatchesBuildColumn) {
    std::mt19937_64 rng(3);
    l1line::RatioColumn reused;
    for (int trial = 0; trial < 20; ++trial) {
        const auto d = fixtures::random_data(rng, fixtures::uniform_index(rng, 1, 15), 3);
        l1line::build_column_into(d, 2, 0, reused);
        const auto fresh = build_column(d, 2, 0);
        ASSERT_EQ(reused.size(), fresh.size());
        EXPECT_EQ(reused.prefix_weights, fresh.prefix_weights);
        for (std::size_t k = 0; k < fresh.size(); ++k) EXPECT_EQ(reused.entries[k].ratio, fresh.entries[k].ratio);
    }
}

}  // namespace
