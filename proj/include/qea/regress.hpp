#pragma once

// Exponential time trends fitted as straight lines in (year, log10 value) space.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "qea/errors.hpp"
#include "qea/trenddata.hpp"

namespace qea {

/// log10(value) = intercept_log10 + slope_oom_per_year * year
struct LogLinearFit {
    double slope_oom_per_year = 0.0;
    double intercept_log10 = 0.0;
    std::optional<double> quantile; ///< absent for least-squares fits
    std::size_t n_points = 0;

    double log10_at(double year) const { return intercept_log10 + slope_oom_per_year * year; }

    /// Same value at `pivot_year`, different slope.
    LogLinearFit with_slope(double slope, double pivot_year) const {
        LogLinearFit out = *this;
        out.intercept_log10 = log10_at(pivot_year) - slope * pivot_year;
        out.slope_oom_per_year = slope;
        return out;
    }

    /// Line through `log10_value` at `year` with the given slope.
    static LogLinearFit anchored(double year, double log10_value, double slope) {
        return {slope, log10_value - slope * year, std::nullopt, 0};
    }

    friend bool operator==(const LogLinearFit&, const LogLinearFit&) = default;
};

struct Extrapolation {
    double value;
    bool overflow; ///< value is +inf because 10^x exceeded double range
};

inline Extrapolation extrapolate(const LogLinearFit& fit, double year) {
    double v = std::pow(10.0, fit.log10_at(year));
    return {v, std::isinf(v)};
}

inline double pinball(double residual, double q) {
    return residual >= 0.0 ? q * residual : (q - 1.0) * residual;
}

/// Quantile loss of `fit` over a series, measured in log10 space.
inline double pinball_loss(const LogLinearFit& fit, std::span<const SeriesPoint> pts, double q) {
    double loss = 0.0;
    for (const auto& p : pts) loss += pinball(std::log10(p.value) - fit.log10_at(p.year), q);
    return loss;
}

namespace detail {

struct Centered {
    double x_ref;
    std::vector<double> x; // year - x_ref
    std::vector<double> y; // log10(value)
};

inline Centered center_series(std::span<const SeriesPoint> pts) {
    if (pts.size() < 2) throw FitError("need at least 2 points, got " + std::to_string(pts.size()));
    Centered c{pts.front().year, {}, {}};
    bool distinct = false;
    for (const auto& p : pts) {
        if (!(p.value > 0.0)) throw FitError("series values must be positive");
        if (p.year != c.x_ref) distinct = true;
        c.x.push_back(p.year - c.x_ref);
        c.y.push_back(std::log10(p.value));
    }
    if (!distinct) throw FitError("need at least two distinct years");
    return c;
}

} // namespace detail

/// Linear quantile regression of log10(value) on year.
///
/// Every line through two points with distinct years is evaluated and the one
/// with the smallest pinball loss is kept; since an optimal basic solution
/// always exists this is exact. Ties go to the smaller slope, then the smaller
/// intercept. O(n^3), fine for the few hundred points trend data has.
inline LogLinearFit fit_quantile(std::span<const SeriesPoint> pts, double q) {
    if (!(q > 0.0 && q < 1.0)) throw FitError("quantile must lie strictly between 0 and 1");
    const auto c = detail::center_series(pts);
    const std::size_t n = c.x.size();

    double best_loss = std::numeric_limits<double>::infinity();
    double best_slope = 0.0, best_icpt = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (c.x[i] == c.x[j]) continue;
            double slope = (c.y[j] - c.y[i]) / (c.x[j] - c.x[i]);
            double icpt = c.y[i] - slope * c.x[i];
            double loss = 0.0;
            for (std::size_t k = 0; k < n; ++k) loss += pinball(c.y[k] - (icpt + slope * c.x[k]), q);

            // losses within a few ulps are ties
            bool better = !std::isfinite(best_loss);
            if (!better) {
                const double tol = 1e-13 * std::max(1.0, best_loss);
                better = loss < best_loss - tol ||
                         (std::abs(loss - best_loss) <= tol && std::tie(slope, icpt) < std::tie(best_slope, best_icpt));
            }
            if (better) {
                best_loss = std::min(loss, best_loss);
                best_slope = slope;
                best_icpt = icpt;
            }
        }
    }
    return {best_slope, best_icpt - best_slope * c.x_ref, q, n};
}

/// Ordinary least squares of log10(value) on year (closed-form normal equations).
inline LogLinearFit fit_least_squares(std::span<const SeriesPoint> pts) {
    const auto c = detail::center_series(pts);
    const double n = static_cast<double>(c.x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < c.x.size(); ++i) {
        mx += c.x[i];
        my += c.y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < c.x.size(); ++i) {
        sxx += (c.x[i] - mx) * (c.x[i] - mx);
        sxy += (c.x[i] - mx) * (c.y[i] - my);
    }
    double slope = sxy / sxx;
    double icpt = my - slope * mx;
    return {slope, icpt - slope * c.x_ref, std::nullopt, c.x.size()};
}

} // namespace qea
