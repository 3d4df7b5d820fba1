#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qea/regress.hpp"

using namespace qea;

namespace {

// Independent exhaustive oracle: best pinball loss over all lines through two
// points with distinct years, computed directly in (year, log10 value) space.
double brute_force_min_loss(const std::vector<SeriesPoint>& pts, double q) {
    double best = INFINITY;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i].year == pts[j].year) continue;
            const double yi = std::log10(pts[i].value), yj = std::log10(pts[j].value);
            const double b = (yj - yi) / (pts[j].year - pts[i].year);
            const double a = yi - b * pts[i].year;
            double loss = 0;
            for (const auto& p : pts) {
                const double r = std::log10(p.value) - (a + b * p.year);
                loss += r > 0 ? q * r : (q - 1) * r;
            }
            best = std::min(best, loss);
        }
    return best;
}

std::vector<SeriesPoint> random_series(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> year(2000, 2030), noise(-1.5, 1.5);
    std::vector<SeriesPoint> pts;
    for (int i = 0; i < n; ++i) {
        const double y = std::round(year(rng) * 4) / 4;
        pts.push_back({y, std::pow(10.0, 0.2 * (y - 2000) + noise(rng))});
    }
    return pts;
}

} // namespace

TEST(FitQuantile, TwoPointsInterpolate) {
    std::vector<SeriesPoint> pts = {{2020, 10}, {2021, 100}};
    auto fit = fit_quantile(pts, 0.9);
    EXPECT_NEAR(fit.slope_oom_per_year, 1.0, 1e-12);
    EXPECT_NEAR(pinball_loss(fit, pts, 0.9), 0.0, 1e-12);
    EXPECT_EQ(fit.quantile, 0.9);
    EXPECT_EQ(fit.n_points, 2u);
}

TEST(FitQuantile, ConstantSeries) {
    std::vector<SeriesPoint> pts = {{2020, 50}, {2021, 50}, {2022, 50}};
    auto fit = fit_quantile(pts, 0.5);
    EXPECT_NEAR(fit.slope_oom_per_year, 0.0, 1e-15);
    EXPECT_NEAR(fit.log10_at(0), std::log10(50.0), 1e-12);
}

TEST(FitQuantile, Rejections) {
    std::vector<SeriesPoint> one = {{2020, 1}};
    std::vector<SeriesPoint> same_year = {{2020, 1}, {2020, 2}};
    std::vector<SeriesPoint> nonpos = {{2020, 1}, {2021, 0}};
    EXPECT_THROW(fit_quantile(one, 0.5), FitError);
    EXPECT_THROW(fit_quantile(same_year, 0.5), FitError);
    EXPECT_THROW(fit_quantile(nonpos, 0.5), FitError);
    std::vector<SeriesPoint> ok = {{2020, 1}, {2021, 2}};
    EXPECT_THROW(fit_quantile(ok, 0.0), FitError);
    EXPECT_THROW(fit_quantile(ok, 1.0), FitError);
}

TEST(FitQuantile, MatchesExhaustiveOracle) {
    std::mt19937_64 rng(42);
    for (double q : {0.2, 0.5, 0.9})
        for (int trial = 0; trial < 50; ++trial) {
            const auto pts = random_series(rng, 20);
            const auto fit = fit_quantile(pts, q);
            const double oracle = brute_force_min_loss(pts, q);
            EXPECT_NEAR(pinball_loss(fit, pts, q), oracle, 1e-12 * std::max(1.0, oracle));
        }
}

TEST(FitQuantile, CoverageBounds) {
    std::mt19937_64 rng(99);
    for (double q : {0.2, 0.5, 0.9})
        for (int trial = 0; trial < 50; ++trial) {
            auto pts = random_series(rng, 20);
            // distinct years for the coverage property
            for (std::size_t i = 0; i < pts.size(); ++i) pts[i].year = 2000 + static_cast<double>(i);
            const auto fit = fit_quantile(pts, q);
            int below = 0, above = 0;
            for (const auto& p : pts) {
                const double r = std::log10(p.value) - fit.log10_at(p.year);
                if (r < -1e-9) ++below;
                if (r > 1e-9) ++above;
            }
            const double n = static_cast<double>(pts.size());
            EXPECT_LE(below, std::ceil(q * n) + 1);
            EXPECT_LE(above, std::ceil((1 - q) * n) + 1);
        }
}

TEST(FitQuantile, ScaleEquivariance) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = random_series(rng, 15);
        auto scaled = pts;
        for (auto& p : scaled) p.value *= 10;
        const auto a = fit_quantile(pts, 0.9);
        const auto b = fit_quantile(scaled, 0.9);
        EXPECT_NEAR(b.slope_oom_per_year, a.slope_oom_per_year, 1e-9);
        EXPECT_NEAR(b.intercept_log10 - a.intercept_log10, 1.0, 1e-6);
    }
}

TEST(FitQuantile, TieBreakPrefersSmallerSlope) {
    // With q = 0.5 every line between the two middle points of this
    // symmetric set has equal loss; the flattest one wins.
    std::vector<SeriesPoint> pts = {{2020, 1}, {2021, 10}};
    pts.push_back({2020, 10});
    pts.push_back({2021, 1});
    const auto fit = fit_quantile(pts, 0.5);
    EXPECT_LT(fit.slope_oom_per_year, -0.99);
}

TEST(FitLeastSquares, TwoPointsInterpolate) {
    std::vector<SeriesPoint> pts = {{2020, 10}, {2021, 100}};
    const auto fit = fit_least_squares(pts);
    EXPECT_NEAR(fit.slope_oom_per_year, 1.0, 1e-12);
    EXPECT_NEAR(fit.log10_at(2020), 1.0, 1e-9);
    EXPECT_FALSE(fit.quantile.has_value());
}

TEST(FitLeastSquares, SymmetricSetHasZeroSlope) {
    std::vector<SeriesPoint> pts = {{2020, 10}, {2021, 100}, {2022, 10}};
    EXPECT_NEAR(fit_least_squares(pts).slope_oom_per_year, 0.0, 1e-12);
}

TEST(FitLeastSquares, MatchesNormalEquations) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_series(rng, 10);
        // raw (uncentered) normal equations in long double
        long double sx = 0, sy = 0, sxx = 0, sxy = 0, n = pts.size();
        for (const auto& p : pts) {
            const long double x = p.year, y = std::log10(p.value);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const long double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const long double a = (sy - b * sx) / n;
        const auto fit = fit_least_squares(pts);
        EXPECT_NEAR(fit.slope_oom_per_year, static_cast<double>(b), 1e-9 * std::abs(static_cast<double>(b)));
        EXPECT_NEAR(fit.intercept_log10, static_cast<double>(a), 1e-9 * std::abs(static_cast<double>(a)));
    }
}

TEST(Extrapolate, Examples) {
    EXPECT_NEAR(extrapolate({1.0, -2010.0, std::nullopt, 2}, 2020).value, 1e10, 1e-3);
    EXPECT_DOUBLE_EQ(extrapolate({0.0, 2.0, std::nullopt, 2}, 1990).value, 100.0);
    std::vector<SeriesPoint> pts = {{2020, 10}, {2021, 100}};
    EXPECT_NEAR(extrapolate(fit_quantile(pts, 0.9), 2025).value, 1e6, 1e-3);
}

TEST(Extrapolate, OverflowIsFlagged) {
    const auto e = extrapolate({1.0, 0.0, std::nullopt, 2}, 400);
    EXPECT_TRUE(e.overflow);
    EXPECT_TRUE(std::isinf(e.value));
    EXPECT_FALSE(extrapolate({1.0, 0.0, std::nullopt, 2}, 300).overflow);
}

TEST(LogLinearFit, WithSlopePivots) {
    const LogLinearFit f{0.3, -600, 0.9, 10};
    const auto g = f.with_slope(0.1, 2025);
    EXPECT_NEAR(g.log10_at(2025), f.log10_at(2025), 1e-9);
    EXPECT_DOUBLE_EQ(g.slope_oom_per_year, 0.1);
}
