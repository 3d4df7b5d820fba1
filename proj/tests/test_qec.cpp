#include <cmath>

#include <gtest/gtest.h>

#include "qea/qec.hpp"

using namespace qea;

namespace {
// Literal evaluation of the overhead formula in an arbitrary log base.
double overhead_oracle(double p, double p_th, double p_L, double (*lg)(double)) {
    const double bracket = 4 * lg(std::sqrt(10.0) * p / p_L) / lg(p_th / p) + 1;
    return std::max(1.0, bracket * bracket);
}
double log2d(double x) { return std::log2(x); }
double lnd(double x) { return std::log(x); }
double log10d(double x) { return std::log10(x); }
} // namespace

TEST(PhysicalPerLogical, SpotValue) {
    const double f = physical_per_logical(1e-3);
    EXPECT_NEAR(f, 3969.0, 3969.0 * 1e-12);
    EXPECT_NEAR(f, overhead_oracle(1e-3, 1e-2, 1e-18, log10d), 3969.0 * 1e-12);
}

TEST(PhysicalPerLogical, ZeroNumeratorGivesOne) {
    EXPECT_NEAR(physical_per_logical(1e-18 / std::sqrt(10.0)), 1.0, 1e-12);
}

TEST(PhysicalPerLogical, Rejections) {
    EXPECT_THROW(physical_per_logical(1e-2), ThresholdError);
    EXPECT_THROW(physical_per_logical(0.5), ThresholdError);
    EXPECT_THROW(physical_per_logical(0.0), DomainError);
    EXPECT_THROW(physical_per_logical(-1e-3), DomainError);
    EXPECT_THROW(physical_per_logical(1e-3, {1e-2, 1e-1}), DomainError);
}

TEST(PhysicalPerLogical, BaseInvariant) {
    for (double p : {1e-9, 1e-6, 1e-4, 1e-3, 5e-3, 9e-3}) {
        const double a = overhead_oracle(p, 1e-2, 1e-18, log10d);
        EXPECT_NEAR(overhead_oracle(p, 1e-2, 1e-18, log2d), a, a * 1e-12);
        EXPECT_NEAR(overhead_oracle(p, 1e-2, 1e-18, lnd), a, a * 1e-12);
        EXPECT_NEAR(physical_per_logical(p), a, a * 1e-12);
    }
}

TEST(PhysicalPerLogical, MonotoneInErrorRateAndTarget) {
    double prev = 0;
    for (double lg = -17.0; lg < -2.0; lg += 0.05) {
        const double f = physical_per_logical(std::pow(10.0, lg));
        EXPECT_GT(f, prev);
        prev = f;
    }
    double prev_l = INFINITY;
    for (double lg = -24.0; lg < -6.0; lg += 0.5) {
        const double f = physical_per_logical(1e-3, {1e-2, std::pow(10.0, lg)});
        EXPECT_LT(f, prev_l);
        prev_l = f;
    }
}

TEST(CodeDistance, Examples) {
    EXPECT_EQ(code_distance(3969), 32);
    EXPECT_EQ(code_distance(1), 1);
    EXPECT_EQ(code_distance(9), 2);
    EXPECT_EQ(code_distance(9.000001), 3);
    EXPECT_THROW(code_distance(0.5), DomainError);
}

TEST(CodeDistance, InvertsSquareMap) {
    for (std::int64_t d = 1; d < 20000; ++d) {
        const double f = static_cast<double>((2 * d - 1) * (2 * d - 1));
        ASSERT_EQ(code_distance(f), d);
    }
}

TEST(CodeDistance, IsMinimal) {
    for (double f = 1; f < 1e7; f *= 1.37) {
        const auto d = code_distance(f);
        EXPECT_GE(static_cast<double>((2 * d - 1) * (2 * d - 1)), f);
        if (d > 1) EXPECT_LT(static_cast<double>((2 * d - 3) * (2 * d - 3)), f);
    }
}

TEST(ToffoliCycles, Examples) {
    EXPECT_DOUBLE_EQ(toffoli_cycles(1), 5.5);
    EXPECT_DOUBLE_EQ(toffoli_cycles(32), 176.0);
    EXPECT_DOUBLE_EQ(toffoli_cycles(10), 55.0);
}

TEST(ThroughputPenalty, Examples) {
    EXPECT_DOUBLE_EQ(throughput_penalty(100, 100).combined, 1.0);
    EXPECT_DOUBLE_EQ(throughput_penalty(400, 100).combined, 8.0);
    EXPECT_DOUBLE_EQ(throughput_penalty(400, 100).latency, 2.0);
    EXPECT_NEAR(throughput_penalty(3969, 100).combined, std::pow(39.69, 1.5), 1e-9);
    EXPECT_NEAR(throughput_penalty(3969, 100).combined, 250.05, 0.1);
    EXPECT_THROW(throughput_penalty(0.5, 1), DomainError);
}

TEST(ThroughputPenalty, Composes) {
    for (double a : {1.0, 7.0, 300.0})
        for (double b : {2.0, 50.0})
            for (double c : {1.5, 4000.0}) {
                const double lhs = throughput_penalty(a, b).combined * throughput_penalty(b, c).combined;
                EXPECT_NEAR(lhs, throughput_penalty(a, c).combined, 1e-12 * lhs);
            }
}
