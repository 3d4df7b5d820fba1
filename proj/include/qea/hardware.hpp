#pragma once

// Quantum and classical operation rates over calendar time.
//
// Quantum cost per logical operation combines the gate clock, the
// error-correction slowdown, gate-line parallelism and cloud price. The
// error-correction slowdown is anchored at `base_ec_slowdown` in the base
// year and follows the f_QEC^{3/2} law as physical error rates move.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qea/errors.hpp"
#include "qea/qec.hpp"
#include "qea/regress.hpp"

namespace qea {

inline constexpr double seconds_per_month = 30.0 * 24.0 * 3600.0; // 2,592,000

struct PlatformSpec {
    std::string name = "superconducting";
    double clock_hz = 2e6;            ///< gate attempts per second before error correction
    double price_per_second = 1.60;   ///< USD per machine-second
    double parallel_gate_lines = 10;  ///< simultaneously drivable gate operations
    double base_ec_slowdown = 1e2;    ///< error-correction slowdown in base_year
    double base_year = 2025;
    LogLinearFit error_fit;      ///< two-qubit gate error
    LogLinearFit gate_time_fit;  ///< two-qubit gate time; only its slope matters
    LogLinearFit qubit_fit;      ///< physical qubit count
    SurfaceCodeParams qec_params;

    double gate_time_s() const { return 1.0 / clock_hz; }
    double price_per_gate() const { return price_per_second / clock_hz; }

    void validate() const {
        auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
        if (!positive(clock_hz) || !positive(price_per_second) || !positive(parallel_gate_lines) ||
            !positive(base_ec_slowdown))
            throw ConfigError("platform '" + name + "': rates and prices must be positive");
        if (!(base_year >= 1990 && base_year <= 2100))
            throw ConfigError("platform '" + name + "': base year outside [1990, 2100]");
        qec_params.validate();
    }
};

struct ClassicalSpec {
    double ops_per_machine_second = 2e15; ///< H100-class FP16 throughput
    double price_per_hour = 3.0;          ///< USD
    double growth_oom_per_year = 0.0;
    double base_year = 2025;

    void validate() const {
        if (!(std::isfinite(ops_per_machine_second) && ops_per_machine_second > 0.0) ||
            !(std::isfinite(price_per_hour) && price_per_hour > 0.0))
            throw ConfigError("classical spec: rates and prices must be positive");
        if (!std::isfinite(growth_oom_per_year)) throw ConfigError("classical growth must be finite");
    }
};

/// Physical error rate and the resulting overhead at a given year.
struct QecState {
    double error_rate;
    double f_qec;
    double f_qec_base;
    ThroughputPenalty penalty;
};

inline double error_rate_at(const PlatformSpec& spec, double year) {
    return extrapolate(spec.error_fit, year).value;
}

/// Throws ThresholdError when the extrapolated error rate in `year` (or in
/// the base year) is not below threshold.
inline QecState qec_state(const PlatformSpec& spec, double year) {
    const double p = error_rate_at(spec, year);
    const double p_base = error_rate_at(spec, spec.base_year);
    if (!(p < spec.qec_params.p_th))
        throw ThresholdError("pre-threshold era: extrapolated gate error " + std::to_string(p) +
                             " in " + std::to_string(year));
    if (!(p_base < spec.qec_params.p_th))
        throw ThresholdError("pre-threshold era: base-year gate error " + std::to_string(p_base));
    const double f = physical_per_logical(p, spec.qec_params);
    const double fb = physical_per_logical(p_base, spec.qec_params);
    return {p, f, fb, throughput_penalty(f, fb)};
}

/// Gate clock in `year`, scaled by the gate-time trend relative to base_year.
inline double clock_at(const PlatformSpec& spec, double year) {
    return spec.clock_hz * std::pow(10.0, -spec.gate_time_fit.slope_oom_per_year * (year - spec.base_year));
}

/// Logical operations per dollar-second.
inline double quantum_rate(const PlatformSpec& spec, double year) {
    const auto q = qec_state(spec, year);
    const double ec = spec.base_ec_slowdown * q.penalty.combined;
    return clock_at(spec, year) / ec * spec.parallel_gate_lines / spec.price_per_second;
}

/// Classical operations per dollar-second.
inline double classical_rate(const ClassicalSpec& spec, double year) {
    return spec.ops_per_machine_second / (spec.price_per_hour / 3600.0) *
           std::pow(10.0, spec.growth_oom_per_year * (year - spec.base_year));
}

/// Per-operation cost ratio quantum / classical at equal budget.
inline double slowdown(const PlatformSpec& platform, const ClassicalSpec& classical, double year) {
    return classical_rate(classical, year) / quantum_rate(platform, year);
}

struct LogicalQubits {
    std::int64_t count;
    bool pre_threshold; ///< no logical qubits because error correction is not yet possible
};

inline LogicalQubits logical_qubits(const PlatformSpec& spec, double year) {
    const double p = error_rate_at(spec, year);
    if (!(p < spec.qec_params.p_th)) return {0, true};
    const double physical = extrapolate(spec.qubit_fit, year).value;
    const double ratio = physical / physical_per_logical(p, spec.qec_params);
    if (!(ratio < 9e18)) return {std::numeric_limits<std::int64_t>::max(), false};
    // absorb rounding in f_qec so that exactly f_qec physical qubits give one logical qubit
    return {static_cast<std::int64_t>(std::floor(ratio * (1.0 + 1e-12))), false};
}

/// Sequential logical operations per wall-clock second: one execution thread,
/// no price, latency-only share (sqrt) of the error-correction penalty.
inline double wallclock_logical_rate(const PlatformSpec& spec, double year) {
    const auto q = qec_state(spec, year);
    return clock_at(spec, year) / (spec.base_ec_slowdown * q.penalty.latency);
}

struct YearGrid {
    double first = 2025;
    double last = 2060;
    double step = 1.0;

    std::vector<double> years() const {
        if (!(step > 0.0) || !(last >= first)) throw ConfigError("year grid must be non-empty and ascending");
        std::vector<double> out;
        for (int i = 0;; ++i) {
            const double y = first + i * step;
            if (y > last + 1e-9) break;
            out.push_back(y);
        }
        return out;
    }
};

struct TimelinePoint {
    double year;
    std::optional<double> quantum_rate;
    std::optional<double> classical_rate;
    std::optional<double> slowdown;
    std::int64_t logical_qubits = 0;
    std::optional<double> logical_ops_per_second;
    std::string note; ///< why a quantity is missing
};

inline std::vector<TimelinePoint> rate_timeline(const PlatformSpec& platform, const ClassicalSpec& classical,
                                                const YearGrid& grid = {}) {
    std::vector<TimelinePoint> out;
    for (double y : grid.years()) {
        TimelinePoint pt{y, std::nullopt, classical_rate(classical, y), std::nullopt, 0, std::nullopt, {}};
        pt.logical_qubits = logical_qubits(platform, y).count;
        try {
            pt.quantum_rate = quantum_rate(platform, y);
            pt.slowdown = *pt.classical_rate / *pt.quantum_rate;
            pt.logical_ops_per_second = wallclock_logical_rate(platform, y);
        } catch (const ThresholdError& e) {
            pt.note = e.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace qea
