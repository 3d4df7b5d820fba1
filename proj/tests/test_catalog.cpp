#include <cmath>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qea/catalog.hpp"

using namespace qea;

TEST(Catalog, GroverEntry) {
    const auto& g = pair_by_id("grover_search");
    EXPECT_EQ(g.quantum_cost.text(), "n^0.5");
    EXPECT_EQ(g.classical_cost.text(), "n");
    EXPECT_TRUE(g.requires_qram);
    EXPECT_FALSE(g.caveats.empty());
}

TEST(Catalog, Lookup) {
    EXPECT_EQ(pair_by_id("dense_matmul").classical_cost.text(), "n^3");
    try {
        pair_by_id("nope");
        FAIL();
    } catch (const UnknownId& e) {
        EXPECT_NE(std::string(e.what()).find("grover_search"), std::string::npos);
    }
    EXPECT_THROW(pair_by_id("Grover_search"), UnknownId);
    EXPECT_GE(builtin_pairs().size(), 12u);
}

TEST(Catalog, ParametersAreBound) {
    for (const auto& p : builtin_pairs()) {
        for (const auto* e : {&p.quantum_cost, &p.classical_cost, &p.qubit_requirement})
            for (const auto& v : e->variables())
                if (v != "n") EXPECT_TRUE(p.default_params.contains(v)) << p.id << " " << v;
    }
}

TEST(Catalog, EvaluatesFinitePositive) {
    for (const auto& p : builtin_pairs())
        for (double n : {2.0, 10.0, 1e6}) {
            Env env = p.default_params;
            env.set("n", n);
            for (const auto* e : {&p.quantum_cost, &p.classical_cost}) {
                const auto r = e->evaluate(env);
                EXPECT_TRUE(std::isfinite(r.value) && r.value > 0) << p.id << " n=" << n;
            }
        }
}

TEST(Catalog, StrictlyIncreasingOnLogGrid) {
    for (const auto& p : builtin_pairs())
        for (const auto* e : {&p.quantum_cost, &p.classical_cost}) {
            double prev = -INFINITY;
            for (int i = 0; i <= 200; ++i) {
                const double lg = std::log10(2.0) + (40.0 - std::log10(2.0)) * i / 200.0;
                const double c = e->log10_cost(p.default_params, "n", lg);
                EXPECT_GT(c, prev) << p.id << " " << e->text() << " at 1e" << lg;
                prev = c;
            }
        }
}

TEST(Catalog, SpeedupGrowsAsymptotically) {
    for (const auto& p : builtin_pairs()) {
        auto ratio = [&](double lg) {
            return p.classical_cost.log10_cost(p.default_params, "n", lg) -
                   p.quantum_cost.log10_cost(p.default_params, "n", lg);
        };
        EXPECT_GT(ratio(40), ratio(6)) << p.id;
    }
}

TEST(Catalog, IdsUniqueAndValid) {
    auto ids = builtin_pair_ids();
    std::set<std::string> uniq(ids.begin(), ids.end());
    EXPECT_EQ(uniq.size(), ids.size());
    for (const auto& p : builtin_pairs()) EXPECT_NO_THROW(p.validate());
}

TEST(Platforms, Presets) {
    const auto& sc = platform_by_name("superconducting");
    const auto& ion = platform_by_name("ion_trap");
    const auto& na = platform_by_name("neutral_atom");
    EXPECT_NEAR(ion.gate_time_s(), 5e-4, 1e-15);
    EXPECT_NEAR(ion.price_per_gate(), 1e-3, 1e-15);
    EXPECT_NEAR(ion.gate_time_s() / sc.gate_time_s(), 1e3, 1e-9);
    EXPECT_NEAR(na.gate_time_s(), 4e-7, 1e-18);
    EXPECT_NEAR(na.price_per_second / sc.price_per_second, 0.10 / 1.60, 1e-15);
    EXPECT_NEAR(ion.error_fit.slope_oom_per_year, 2 * sc.error_fit.slope_oom_per_year, 1e-15);
    EXPECT_THROW(platform_by_name("photonic"), UnknownId);
}

TEST(Platforms, SuperconductingSlowdownNearTenToThirteen) {
    const auto& sc = platform_by_name("superconducting");
    const double s = slowdown(sc, ClassicalSpec{}, sc.base_year);
    EXPECT_LE(std::abs(std::log10(s) - 13.0), 0.5);
}

TEST(Platforms, PresetFitsMatchBundledData) {
    std::ifstream in(std::string(QEA_DATA_DIR) + "/sample_trends.csv", std::ios::binary);
    const auto ds = load_records(in);
    for (const char* name : {"superconducting", "ion_trap", "neutral_atom"}) {
        const auto& preset = platform_by_name(name);
        const auto refit = apply_trend_data(preset, ds);
        EXPECT_NEAR(refit.qubit_fit.slope_oom_per_year, preset.qubit_fit.slope_oom_per_year, 1e-12) << name;
        EXPECT_NEAR(refit.qubit_fit.intercept_log10, preset.qubit_fit.intercept_log10, 1e-9) << name;
        EXPECT_NEAR(refit.gate_time_fit.slope_oom_per_year, preset.gate_time_fit.slope_oom_per_year, 1e-12)
            << name;
        if (std::string(name) != "ion_trap") {
            EXPECT_NEAR(refit.error_fit.slope_oom_per_year, preset.error_fit.slope_oom_per_year, 1e-12) << name;
        }
    }
}
