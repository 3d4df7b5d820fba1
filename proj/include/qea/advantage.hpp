#pragma once

// Quantum economic advantage solver.
//
// For each year the solver finds the smallest problem size at which the
// quantum algorithm is cheaper than the classical one at equal budget (the
// crossover), and the largest sizes that still fit the wall-clock limit and
// the available logical qubits. Sizes are handled as log10(n) on
// [log10 2, 400] so that costs far beyond the double range can be compared.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qea/catalog.hpp"
#include "qea/costlang.hpp"
#include "qea/errors.hpp"
#include "qea/hardware.hpp"

namespace qea {

inline const double min_log10_size = std::log10(2.0);
inline constexpr double max_log10_size = 400.0;
inline constexpr double qram_cap_log2 = 40.0;
inline constexpr int monotone_grid_points = 64;

struct ProblemSize {
    double log10_n;
    bool at_lower_edge = false; ///< clamped to n = 2
    bool capped = false;        ///< clamped to the 10^400 domain limit
    bool qram_capped = false;   ///< clamped to the 2^40 QRAM limit

    double linear() const { return std::pow(10.0, log10_n); } // +inf beyond ~1e308
};

namespace detail {

/// Smallest x in (lo, hi] with pred(x), given !pred(lo) and pred(hi). Runs to
/// double resolution.
template <class Pred>
double lower_boundary(double lo, double hi, const Pred& pred) {
    for (int i = 0; i < 256; ++i) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

/// Largest x in [lo, hi) with pred(x), given pred(lo) and !pred(hi).
template <class Pred>
double upper_boundary(double lo, double hi, const Pred& pred) {
    for (int i = 0; i < 256; ++i) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        (pred(mid) ? lo : hi) = mid;
    }
    return lo;
}

inline std::vector<double> log_grid() {
    std::vector<double> xs(monotone_grid_points);
    for (int i = 0; i < monotone_grid_points; ++i)
        xs[i] = min_log10_size + (max_log10_size - min_log10_size) * i / (monotone_grid_points - 1);
    return xs;
}

inline bool decreases(double prev, double next) {
    return next < prev - 1e-9 * std::max(1.0, std::abs(prev));
}

} // namespace detail

/// Rejects pairs whose classical/quantum cost ratio or quantum cost decreases
/// somewhere on a log grid over the size domain.
inline void check_monotone(const AlgorithmPair& pair, const Env& params) {
    double prev_ratio = 0.0, prev_q = 0.0;
    bool first = true;
    for (double x : detail::log_grid()) {
        const double lq = pair.quantum_cost.log10_cost(params, "n", x);
        const double ratio = pair.classical_cost.log10_cost(params, "n", x) - lq;
        if (!first && detail::decreases(prev_ratio, ratio))
            throw NonMonotoneError("pair '" + pair.id +
                                   "': classical/quantum cost ratio decreases with n; analyze the crossover manually");
        if (!first && detail::decreases(prev_q, lq))
            throw NonMonotoneError("pair '" + pair.id + "': quantum cost decreases with n");
        prev_ratio = ratio;
        prev_q = lq;
        first = false;
    }
}

/// Smallest n >= 2 with quantum_constant * S * g_q(n) <= classical_constant * g_c(n),
/// or nullopt when no such n exists below 10^400.
inline std::optional<ProblemSize> crossover_size(const AlgorithmPair& pair, double slowdown,
                                                 double quantum_constant = 1.0, double classical_constant = 1.0,
                                                 const Env& params = {}) {
    if (!(slowdown > 0.0) || !std::isfinite(slowdown)) throw DomainError("slowdown must be positive and finite");
    if (!(quantum_constant > 0.0) || !(classical_constant > 0.0))
        throw DomainError("algorithmic constants must be positive");
    const Env env = pair.default_params.merged(params);
    check_monotone(pair, env);

    const double q_offset = std::log10(quantum_constant) + std::log10(slowdown);
    const double c_offset = std::log10(classical_constant);
    auto quantum_cheaper = [&](double x) {
        return q_offset + pair.quantum_cost.log10_cost(env, "n", x) <=
               c_offset + pair.classical_cost.log10_cost(env, "n", x);
    };
    if (quantum_cheaper(min_log10_size)) return ProblemSize{min_log10_size, true};
    if (!quantum_cheaper(max_log10_size)) return std::nullopt;
    return ProblemSize{detail::lower_boundary(min_log10_size, max_log10_size, quantum_cheaper)};
}

/// Largest n whose sequential quantum runtime fits in time_limit_s at
/// `logical_ops_per_second`; nullopt when even n = 2 does not fit.
inline std::optional<ProblemSize> max_size_time_at_rate(const AlgorithmPair& pair, double logical_ops_per_second,
                                                        double time_limit_s, double quantum_constant = 1.0,
                                                        const Env& params = {}) {
    if (!(logical_ops_per_second > 0.0)) throw DomainError("logical operation rate must be positive");
    if (!(time_limit_s > 0.0)) throw DomainError("time limit must be positive");
    if (!(quantum_constant > 0.0)) throw DomainError("quantum constant must be positive");
    const Env env = pair.default_params.merged(params);
    const double budget = std::log10(time_limit_s) + std::log10(logical_ops_per_second) - std::log10(quantum_constant);
    auto fits = [&](double x) { return pair.quantum_cost.log10_cost(env, "n", x) <= budget; };
    if (!fits(min_log10_size)) return std::nullopt;
    if (fits(max_log10_size)) return ProblemSize{max_log10_size, false, true};
    return ProblemSize{detail::upper_boundary(min_log10_size, max_log10_size, fits)};
}

inline std::optional<ProblemSize> max_size_time(const AlgorithmPair& pair, double year, const PlatformSpec& platform,
                                                double time_limit_s = seconds_per_month,
                                                double quantum_constant = 1.0, const Env& params = {}) {
    return max_size_time_at_rate(pair, wallclock_logical_rate(platform, year), time_limit_s, quantum_constant,
                                 params);
}

/// Largest n whose qubit requirement fits in `logical_qubit_count`.
inline std::optional<ProblemSize> max_size_qubits_for(const AlgorithmPair& pair, std::int64_t logical_qubit_count,
                                                      bool qram_cap_enabled = false, const Env& params = {}) {
    if (logical_qubit_count <= 0) return std::nullopt;
    const Env env = pair.default_params.merged(params);
    const double q = static_cast<double>(logical_qubit_count);
    auto fits = [&](double x) { return pair.qubit_requirement.evaluate_log(env, "n", x).to_double() <= q; };
    std::optional<ProblemSize> out;
    if (!fits(min_log10_size)) return std::nullopt;
    if (fits(max_log10_size))
        out = ProblemSize{max_log10_size, false, true};
    else
        out = ProblemSize{detail::upper_boundary(min_log10_size, max_log10_size, fits)};

    const double cap = qram_cap_log2 * std::log10(2.0);
    if (qram_cap_enabled && pair.requires_qram && out->log10_n > cap) out = ProblemSize{cap, false, false, true};
    return out;
}

inline std::optional<ProblemSize> max_size_qubits(const AlgorithmPair& pair, double year, const PlatformSpec& platform,
                                                  bool qram_cap_enabled = false, const Env& params = {}) {
    return max_size_qubits_for(pair, logical_qubits(platform, year).count, qram_cap_enabled, params);
}

struct AdvantageQuery {
    AlgorithmPair pair;
    PlatformSpec platform;
    ClassicalSpec classical;
    YearGrid years;
    double time_limit_s = seconds_per_month;
    double horizon_year = 2050;
    double quantum_constant = 1.0;
    double classical_constant = 1.0;
    Env param_overrides;
    bool qram_cap_enabled = false;

    Env params() const { return pair.default_params.merged(param_overrides); }

    void validate() const {
        if (!(quantum_constant > 0.0) || !(classical_constant > 0.0))
            throw ConfigError("algorithmic constants must be positive");
        if (!(time_limit_s > 0.0) || !std::isfinite(time_limit_s)) throw ConfigError("time limit must be positive");
        (void)years.years();
        pair.validate();
        platform.validate();
        classical.validate();
    }
};

struct Region {
    double lower_log10;
    double upper_log10;
};

struct YearAdvantage {
    double year = 0;
    std::optional<double> slowdown;
    std::int64_t logical_qubits = 0;
    std::optional<ProblemSize> n_star;
    std::optional<ProblemSize> n_max_time;
    std::optional<ProblemSize> n_max_qubits;
    std::optional<Region> region;
    std::vector<std::string> notes; ///< why a quantity is missing

    bool nonempty() const { return region.has_value(); }
};

/// Per-year crossover, feasibility bounds and advantage region. A year whose
/// hardware state cannot be evaluated (e.g. pre-threshold) becomes a gap with
/// a note. A missing feasibility bound means no size is feasible, so the
/// region is empty.
inline std::vector<YearAdvantage> advantage_region(const AdvantageQuery& query) {
    query.validate();
    const Env env = query.params();
    check_monotone(query.pair, env);

    std::vector<YearAdvantage> out;
    for (double year : query.years.years()) {
        YearAdvantage ya;
        ya.year = year;
        const auto lq = logical_qubits(query.platform, year);
        ya.logical_qubits = lq.count;
        if (lq.pre_threshold) ya.notes.push_back("no logical qubits: gate error above threshold");
        try {
            const double s = slowdown(query.platform, query.classical, year);
            ya.slowdown = s;
            ya.n_star = crossover_size(query.pair, s, query.quantum_constant, query.classical_constant, env);
            ya.n_max_time = max_size_time(query.pair, year, query.platform, query.time_limit_s,
                                          query.quantum_constant, env);
        } catch (const Error& e) {
            ya.notes.push_back(e.what());
        }
        ya.n_max_qubits = max_size_qubits_for(query.pair, lq.count, query.qram_cap_enabled, env);

        if (ya.n_star && ya.n_max_time && ya.n_max_qubits) {
            const double upper = std::min(ya.n_max_time->log10_n, ya.n_max_qubits->log10_n);
            if (ya.n_star->log10_n <= upper) ya.region = Region{ya.n_star->log10_n, upper};
        }
        out.push_back(std::move(ya));
    }
    return out;
}

/// Earliest year with advantage, or censored at the horizon.
struct FirstAdvantage {
    std::optional<double> year;
    double horizon;

    bool censored() const { return !year.has_value(); }
    /// Censored results order after every year.
    double sort_key() const { return year ? *year : INFINITY; }

    friend bool operator==(const FirstAdvantage&, const FirstAdvantage&) = default;
};

inline FirstAdvantage first_advantage_year(const std::vector<YearAdvantage>& years, double horizon_year) {
    for (const auto& y : years) {
        if (y.year > horizon_year) break;
        if (y.nonempty()) return {y.year, horizon_year};
    }
    return {std::nullopt, horizon_year};
}

inline FirstAdvantage first_advantage_year(const AdvantageQuery& query) {
    return first_advantage_year(advantage_region(query), query.horizon_year);
}

} // namespace qea
