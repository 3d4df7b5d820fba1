#pragma once

// Built-in algorithm pairs and hardware platform presets.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qea/costlang.hpp"
#include "qea/errors.hpp"
#include "qea/hardware.hpp"
#include "qea/regress.hpp"
#include "qea/trenddata.hpp"

namespace qea {

/// Conditions an algorithm's speedup depends on. Reported, never checked.
enum class Caveat {
    state_preparation,
    row_sparsity,
    condition_number,
    output_access,
    well_clusterable,
    dissipative_dynamics,
    low_rank_excluded,
};

inline constexpr Caveat all_caveats[] = {
    Caveat::state_preparation,   Caveat::row_sparsity,         Caveat::condition_number,
    Caveat::output_access,       Caveat::well_clusterable,     Caveat::dissipative_dynamics,
    Caveat::low_rank_excluded,
};

inline std::string_view to_string(Caveat c) {
    switch (c) {
    case Caveat::state_preparation: return "state_preparation";
    case Caveat::row_sparsity: return "row_sparsity";
    case Caveat::condition_number: return "condition_number";
    case Caveat::output_access: return "output_access";
    case Caveat::well_clusterable: return "well_clusterable";
    case Caveat::dissipative_dynamics: return "dissipative_dynamics";
    case Caveat::low_rank_excluded: return "low_rank_excluded";
    }
    return "?";
}

inline std::optional<Caveat> parse_caveat(std::string_view s) {
    for (Caveat c : all_caveats)
        if (to_string(c) == s) return c;
    return std::nullopt;
}

/// A quantum algorithm and the classical algorithm it competes with. Costs
/// are written in the problem size `n` plus named parameters.
struct AlgorithmPair {
    std::string id;
    std::string description;
    CostExpr quantum_cost;
    CostExpr classical_cost;
    Env default_params;
    CostExpr qubit_requirement;
    bool requires_qram = false;
    std::set<Caveat> caveats;
    std::string reference;            ///< literature source of the quantum bound
    std::vector<std::string> also_covers;

    /// Checks the structural invariants; throws ConfigError.
    void validate() const {
        for (const auto* e : {&quantum_cost, &classical_cost}) {
            const auto vars = e->variables();
            if (!vars.count("n"))
                throw ConfigError("pair '" + id + "': cost '" + e->text() + "' does not depend on n");
            for (const auto& v : vars)
                if (v != "n" && !default_params.contains(v))
                    throw ConfigError("pair '" + id + "': parameter '" + v + "' has no default");
        }
        for (const auto& v : qubit_requirement.variables())
            if (v != "n" && !default_params.contains(v))
                throw ConfigError("pair '" + id + "': parameter '" + v + "' has no default");
    }
};

namespace detail {

inline AlgorithmPair make_pair(std::string id, std::string description, std::string_view quantum,
                               std::string_view classical, Env params, bool qram, std::set<Caveat> caveats,
                               std::string reference, std::vector<std::string> also = {}) {
    return AlgorithmPair{std::move(id),
                         std::move(description),
                         CostExpr::parse(quantum),
                         CostExpr::parse(classical),
                         std::move(params),
                         CostExpr::parse("log2(n)"),
                         qram,
                         std::move(caveats),
                         std::move(reference),
                         std::move(also)};
}

} // namespace detail

/// Quantum/classical pairs for deep-learning-relevant workloads. Generic
/// logarithms are base 2 and algorithmic constants are 1.
inline const std::vector<AlgorithmPair>& builtin_pairs() {
    using C = Caveat;
    using detail::make_pair;
    static const std::vector<AlgorithmPair> pairs = {
        make_pair("grover_search", "Unstructured search over n items", "n^0.5", "n", {}, true, {C::state_preparation},
                  "Grover 1996", {"durr_hoyer_minimum_finding", "rl_action_selection"}),
        make_pair("exponential_generic", "Generic exponential speedup, log n vs n", "log2(n)", "n", {}, false, {},
                  "abstraction of exponential-speedup algorithms"),
        // the Otilde bound hides a log n factor; one power is kept so the cost depends on n
        make_pair("qmeans", "q-means clustering over n samples, k clusters, d features",
                  "(k^2*d + k^2.5)*log2(n)", "n*d*k", {{"k", 1}, {"d", 1}}, true, {C::well_clusterable},
                  "Kerenidis, Landman, Luongo, Prakash 2019"),
        make_pair("dense_matmul", "Dense n x n matrix multiplication to accuracy eps", "n^2/eps", "n^3",
                  {{"eps", 1}}, true, {}, "swap-test matrix multiplication"),
        make_pair("sparse_output_matmul", "(n x M)(M x n) product with w nonzero outputs",
                  "M*log2(n)*n^(2/3)*w^(2/3)", "n^3", {{"M", 1}, {"w", 1}}, true, {}, "Buhrman, Spalek 2004"),
        make_pair("matmul_statistic", "Single statistic of a dense matrix product", "n^0.5*log2(n)*kappa^2/eps",
                  "n^2", {{"kappa", 1}, {"eps", 1}}, true, {C::output_access, C::condition_number},
                  "Wossnig, Zhao, Prakash 2018"),
        make_pair("hhl_matvec", "Summarized matrix-vector product via HHL", "n", "n^2", {}, false,
                  {C::state_preparation, C::row_sparsity, C::condition_number, C::output_access,
                   C::low_rank_excluded},
                  "Harrow, Hassidim, Lloyd 2009"),
        make_pair("quantum_attention", "Attention over n tokens, k nonzeros per row, head dimension d",
                  "n^1.5*k^0.5*d + n*k*d", "n^2*d", {{"k", 1}, {"d", 1}}, true, {},
                  "Gao, Song, Yang, Yu 2023"),
        // n neurons; E = n^2 edges (dense connectivity)
        make_pair("nn_training_innerprod", "Feed-forward network training with quantum inner products",
                  "(T*M)^1.5*n*log2(1/gamma)/eps*R", "T*M*n^2",
                  {{"T", 1}, {"M", 1}, {"gamma", 0.5}, {"eps", 1}, {"R", 1}}, false, {},
                  "Allcock, Hsieh, Kerenidis, Zhang 2019"),
        make_pair("nn_inference_innerprod", "Feed-forward network inference with quantum inner products",
                  "n*log2(1/gamma)/eps*R_e", "n^2", {{"gamma", 0.5}, {"eps", 1}, {"R_e", 1}}, false, {},
                  "Allcock, Hsieh, Kerenidis, Zhang 2019"),
        // c is the unspecified polylog degree
        make_pair("nn_training_dissipative", "Dissipative sparse network training, n parameters, T iterations",
                  "T*log2(n)^c/eps", "T*n", {{"T", 1}, {"eps", 1}, {"c", 2}}, false,
                  {C::dissipative_dynamics, C::row_sparsity}, "Liu et al. 2024"),
        make_pair("wide_nn_kernel", "Wide-network kernel training over n data points", "log2(n)", "n", {}, true,
                  {C::state_preparation, C::condition_number, C::output_access}, "Zlokapa, Neven, Lloyd 2021"),
    };
    return pairs;
}

inline std::vector<std::string> builtin_pair_ids() {
    std::vector<std::string> ids;
    for (const auto& p : builtin_pairs()) ids.push_back(p.id);
    return ids;
}

/// Case-sensitive lookup; the error lists every valid id.
inline const AlgorithmPair& pair_by_id(std::string_view id) {
    for (const auto& p : builtin_pairs())
        if (p.id == id) return p;
    std::string msg = "unknown algorithm pair '" + std::string(id) + "'; valid ids:";
    for (const auto& p : builtin_pairs()) msg += " " + p.id;
    throw UnknownId(msg);
}

// Trend fits of the bundled illustrative dataset (data/sample_trends.csv).
// Regenerate with `qea fit-trends` if the file changes.
namespace detail {
inline const LogLinearFit sc_qubit_fit{0.21763685537753139, -437.80591523520366, 0.9, 28};
inline const LogLinearFit sc_error_fit{-0.037083473750804008, 72.664625103049886, 0.2, 33};
inline const LogLinearFit sc_gate_time_fit{-0.0033451524166068364, -0.48069879946282512, std::nullopt, 28};
inline const LogLinearFit ion_qubit_fit{0.15633260778052629, -314.89748195260142, 0.9, 29};
inline const LogLinearFit ion_error_fit{-0.064077155810654984, 126.86654514181359, 0.2, 27};
inline const LogLinearFit ion_gate_time_fit{-0.0016092948302161177, 0.02151670775256953, std::nullopt, 25};
inline const LogLinearFit na_qubit_fit{0.24234554797936184, -488.05711970097263, 0.9, 18};
inline const LogLinearFit na_error_fit{-0.065028855562436358, 129.4003737127594, 0.2, 21};
inline const LogLinearFit na_gate_time_fit{-0.038258545847091277, 71.050235352560946, std::nullopt, 13};
} // namespace detail

inline constexpr double default_qubit_quantile = 0.9;
inline constexpr double default_error_quantile = 0.2;

/// Refits the platform's trends from the records tagged with its name.
/// Metrics with fewer than two usable points keep the preset fit.
inline PlatformSpec apply_trend_data(PlatformSpec spec, const Dataset& ds,
                                     double qubit_quantile = default_qubit_quantile,
                                     double error_quantile = default_error_quantile) {
    auto usable = [](const Series& s) {
        return s.size() >= 2 && std::any_of(s.begin(), s.end(), [&](const auto& p) { return p.year != s[0].year; });
    };
    if (auto s = series(ds, spec.name, Metric::physical_qubits); usable(s))
        spec.qubit_fit = fit_quantile(s, qubit_quantile);
    if (auto s = series(ds, spec.name, Metric::two_qubit_gate_error); usable(s))
        spec.error_fit = fit_quantile(s, error_quantile);
    if (auto s = series(ds, spec.name, Metric::two_qubit_gate_time_s); usable(s))
        spec.gate_time_fit = fit_least_squares(s);
    return spec;
}

/// Hardware presets. Superconducting uses the hardware defaults; ion-trap and
/// neutral-atom presets swap in their gate times and prices. Ion-trap error
/// rates fall twice as fast as superconducting ones.
inline const std::vector<PlatformSpec>& builtin_platforms() {
    static const std::vector<PlatformSpec> presets = [] {
        PlatformSpec sc;
        sc.name = "superconducting";
        sc.qubit_fit = detail::sc_qubit_fit;
        sc.error_fit = detail::sc_error_fit;
        sc.gate_time_fit = detail::sc_gate_time_fit;

        PlatformSpec ion = sc;
        ion.name = "ion_trap";
        ion.clock_hz = 1.0 / 5e-4;                // ~0.5 ms two-qubit gates
        ion.price_per_second = 1e-3 * ion.clock_hz; // 1e-3 USD per two-qubit gate
        ion.qubit_fit = detail::ion_qubit_fit;
        ion.error_fit = detail::ion_error_fit.with_slope(2.0 * sc.error_fit.slope_oom_per_year, sc.base_year);
        ion.gate_time_fit = detail::ion_gate_time_fit;

        PlatformSpec na = sc;
        na.name = "neutral_atom";
        na.clock_hz = 1.0 / 4e-7; // ~400 ns CZ gates
        na.price_per_second = 0.10;
        na.qubit_fit = detail::na_qubit_fit;
        na.error_fit = detail::na_error_fit;
        na.gate_time_fit = detail::na_gate_time_fit;
        return std::vector<PlatformSpec>{sc, ion, na};
    }();
    return presets;
}

inline const PlatformSpec& platform_by_name(std::string_view name) {
    for (const auto& p : builtin_platforms())
        if (p.name == name) return p;
    std::string msg = "unknown platform '" + std::string(name) + "'; valid presets:";
    for (const auto& p : builtin_platforms()) msg += " " + p.name;
    throw UnknownId(msg);
}

} // namespace qea
