#pragma once

// One-at-a-time parameter sweeps of the first advantage year.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qea/advantage.hpp"
#include "qea/errors.hpp"

namespace qea {

enum class SweepParameter {
    quantum_constant,
    classical_constant,
    qubit_growth_oom_per_year,
    error_improvement_oom_per_year,
    gate_time_improvement_oom_per_year,
    classical_growth_oom_per_year,
    time_limit_s,
};

inline constexpr SweepParameter all_sweep_parameters[] = {
    SweepParameter::quantum_constant,
    SweepParameter::classical_constant,
    SweepParameter::qubit_growth_oom_per_year,
    SweepParameter::error_improvement_oom_per_year,
    SweepParameter::gate_time_improvement_oom_per_year,
    SweepParameter::classical_growth_oom_per_year,
    SweepParameter::time_limit_s,
};

inline std::string_view to_string(SweepParameter p) {
    switch (p) {
    case SweepParameter::quantum_constant: return "quantum_constant";
    case SweepParameter::classical_constant: return "classical_constant";
    case SweepParameter::qubit_growth_oom_per_year: return "qubit_growth_oom_per_year";
    case SweepParameter::error_improvement_oom_per_year: return "error_improvement_oom_per_year";
    case SweepParameter::gate_time_improvement_oom_per_year: return "gate_time_improvement_oom_per_year";
    case SweepParameter::classical_growth_oom_per_year: return "classical_growth_oom_per_year";
    case SweepParameter::time_limit_s: return "time_limit_s";
    }
    return "?";
}

inline std::optional<SweepParameter> parse_sweep_parameter(std::string_view s) {
    for (auto p : all_sweep_parameters)
        if (to_string(p) == s) return p;
    return std::nullopt;
}

/// Current setting of `param` in `query`. Improvement rates are positive when
/// the metric gets better (error rate or gate time falling).
inline double current_value(const AdvantageQuery& query, SweepParameter param) {
    switch (param) {
    case SweepParameter::quantum_constant: return query.quantum_constant;
    case SweepParameter::classical_constant: return query.classical_constant;
    case SweepParameter::qubit_growth_oom_per_year: return query.platform.qubit_fit.slope_oom_per_year;
    case SweepParameter::error_improvement_oom_per_year: return -query.platform.error_fit.slope_oom_per_year;
    case SweepParameter::gate_time_improvement_oom_per_year: return -query.platform.gate_time_fit.slope_oom_per_year;
    case SweepParameter::classical_growth_oom_per_year: return query.classical.growth_oom_per_year;
    case SweepParameter::time_limit_s: return query.time_limit_s;
    }
    throw InvariantViolation("unhandled sweep parameter");
}

/// Copy of `query` with `param` replaced by `value`. Trend slopes are
/// replaced (not scaled) and pivot on the platform base year, so the base-year
/// hardware state is unchanged.
inline AdvantageQuery with_parameter(AdvantageQuery query, SweepParameter param, double value) {
    auto require_positive = [&] {
        if (!(value > 0.0)) throw ConfigError(std::string(to_string(param)) + " must be positive");
    };
    auto& pf = query.platform;
    switch (param) {
    case SweepParameter::quantum_constant:
        require_positive();
        query.quantum_constant = value;
        break;
    case SweepParameter::classical_constant:
        require_positive();
        query.classical_constant = value;
        break;
    case SweepParameter::qubit_growth_oom_per_year: pf.qubit_fit = pf.qubit_fit.with_slope(value, pf.base_year); break;
    case SweepParameter::error_improvement_oom_per_year:
        pf.error_fit = pf.error_fit.with_slope(-value, pf.base_year);
        break;
    case SweepParameter::gate_time_improvement_oom_per_year:
        pf.gate_time_fit = pf.gate_time_fit.with_slope(-value, pf.base_year);
        break;
    case SweepParameter::classical_growth_oom_per_year: query.classical.growth_oom_per_year = value; break;
    case SweepParameter::time_limit_s:
        require_positive();
        query.time_limit_s = value;
        break;
    }
    return query;
}

struct SweepSpec {
    AdvantageQuery base_query;
    SweepParameter parameter;
    std::vector<double> values;

    void validate() const {
        if (values.empty()) throw ConfigError("sweep needs at least one value");
        for (std::size_t i = 1; i < values.size(); ++i)
            if (!(values[i] > values[i - 1])) throw ConfigError("sweep values must be strictly ascending");
    }
};

struct SweepPoint {
    double value;
    std::optional<FirstAdvantage> outcome; ///< absent when evaluation failed
    std::string error;
};

struct SweepResult {
    SweepParameter parameter;
    std::vector<SweepPoint> points;
};

/// Multiplicative factors 1e-3 ... 1e4 for the algorithmic constants.
inline std::vector<double> default_constant_grid() { return {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3, 1e4}; }

/// 0 to 2x `fitted` in nine equal steps (ascending whatever the sign of fitted).
inline std::vector<double> default_rate_grid(double fitted) {
    std::vector<double> out;
    for (int i = 0; i <= 8; ++i) out.push_back(2.0 * fitted * i / 8.0);
    if (fitted < 0.0) std::reverse(out.begin(), out.end());
    return out;
}

/// Failures at one value are recorded in place and the sweep continues.
inline SweepResult sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult out{spec.parameter, {}};
    for (double v : spec.values) {
        SweepPoint pt{v, std::nullopt, {}};
        try {
            pt.outcome = first_advantage_year(with_parameter(spec.base_query, spec.parameter, v));
        } catch (const Error& e) {
            pt.error = e.what();
        }
        out.points.push_back(std::move(pt));
    }
    return out;
}

} // namespace qea
