#pragma once

// Surface-code overhead model.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "qea/errors.hpp"

namespace qea {

struct SurfaceCodeParams {
    double p_th = 1e-2;  ///< threshold physical error rate
    double p_L = 1e-18;  ///< target logical error rate

    void validate() const {
        if (!(0.0 < p_L && p_L < p_th && p_th < 1.0))
            throw DomainError("surface code parameters need 0 < p_L < p_th < 1");
    }

    friend bool operator==(const SurfaceCodeParams&, const SurfaceCodeParams&) = default;
};

/// Physical qubits per logical qubit needed to reach params.p_L from a
/// physical error rate p:
///
///   f = [4 log(sqrt(10) p / p_L) / log(p_th / p) + 1]^2
///
/// The bracket is clamped at 1, so f >= 1. The log base cancels.
inline double physical_per_logical(double p, const SurfaceCodeParams& params = {}) {
    params.validate();
    if (!(p > 0.0)) throw DomainError("physical error rate must be positive");
    if (p >= params.p_th)
        throw ThresholdError("physical error rate " + std::to_string(p) +
                             " is at or above threshold; not correctable");
    const double num = std::log10(std::sqrt(10.0) * p / params.p_L);
    const double den = std::log10(params.p_th / p);
    const double bracket = std::max(1.0, 4.0 * num / den + 1.0);
    return bracket * bracket;
}

/// Smallest d >= 1 with (2d - 1)^2 >= f_qec.
inline std::int64_t code_distance(double f_qec) {
    if (!(f_qec >= 1.0) || !std::isfinite(f_qec))
        throw DomainError("physical-per-logical ratio must be finite and >= 1");
    auto side = [](std::int64_t d) { return static_cast<double>(2 * d - 1) * (2 * d - 1); };
    auto d = static_cast<std::int64_t>(std::ceil((std::sqrt(f_qec) + 1.0) / 2.0));
    d = std::max<std::int64_t>(d, 1);
    while (d > 1 && side(d - 1) >= f_qec) --d;
    while (side(d) < f_qec) ++d;
    return d;
}

/// Surface-code cycles for one Toffoli at distance d.
inline double toffoli_cycles(std::int64_t distance) {
    if (distance < 1) throw DomainError("code distance must be >= 1");
    return 5.5 * static_cast<double>(distance);
}

/// Slowdown of logical ops/sec relative to a base overhead. Gate latency
/// scales as sqrt(f) and the Toffoli count as f, giving f^{3/2} overall.
struct ThroughputPenalty {
    double latency;  ///< (f / f_base)^{1/2}
    double combined; ///< (f / f_base)^{3/2}
};

inline ThroughputPenalty throughput_penalty(double f_qec, double f_qec_base) {
    if (!(f_qec >= 1.0) || !(f_qec_base >= 1.0))
        throw DomainError("physical-per-logical ratios must be >= 1");
    const double r = f_qec / f_qec_base;
    return {std::sqrt(r), r * std::sqrt(r)};
}

} // namespace qea
