#pragma once

// Serialization of solver and sweep results: CSV, JSON and SVG.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qea/advantage.hpp"
#include "qea/regress.hpp"
#include "qea/sensitivity.hpp"

namespace qea::report {

using json = nlohmann::ordered_json;

inline std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

inline std::string log10_cell(const std::optional<ProblemSize>& s) {
    return s ? fmt("%.9f", s->log10_n) : std::string();
}

inline std::string year_cell(double y) { return fmt("%.10g", y); }

inline std::string censored_label(double horizon) { return "CENSORED>" + year_cell(horizon); }

inline std::string first_year_cell(const FirstAdvantage& f) {
    return f.year ? year_cell(*f.year) : censored_label(f.horizon);
}

inline const char* advantage_csv_header =
    "year,n_star_log10,n_max_time_log10,n_max_qubits_log10,region_lower_log10,region_upper_log10,nonempty";

/// One row per grid year; missing quantities are empty cells.
inline std::string advantage_csv(const std::vector<YearAdvantage>& years) {
    std::string out = advantage_csv_header;
    out += '\n';
    for (const auto& y : years) {
        out += year_cell(y.year) + ',' + log10_cell(y.n_star) + ',' + log10_cell(y.n_max_time) + ',' +
               log10_cell(y.n_max_qubits) + ',';
        if (y.region)
            out += fmt("%.9f", y.region->lower_log10) + ',' + fmt("%.9f", y.region->upper_log10) + ",true";
        else
            out += ",,false";
        out += '\n';
    }
    return out;
}

namespace detail {

inline json size_json(const std::optional<ProblemSize>& s) {
    if (!s) return nullptr;
    json j;
    j["log10"] = s->log10_n;
    const double lin = s->linear();
    j["linear"] = std::isfinite(lin) ? json(lin) : json(nullptr);
    j["at_lower_edge"] = s->at_lower_edge;
    j["domain_capped"] = s->capped;
    j["qram_capped"] = s->qram_capped;
    return j;
}

inline json opt_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

} // namespace detail

inline json pair_json(const AlgorithmPair& p) {
    json j;
    j["id"] = p.id;
    j["description"] = p.description;
    j["quantum_cost"] = p.quantum_cost.text();
    j["classical_cost"] = p.classical_cost.text();
    j["qubit_requirement"] = p.qubit_requirement.text();
    j["default_params"] = json::object();
    for (const auto& [k, v] : p.default_params.values()) j["default_params"][k] = v;
    j["requires_qram"] = p.requires_qram;
    j["caveats"] = json::array();
    for (auto c : p.caveats) j["caveats"].push_back(std::string(to_string(c)));
    j["reference"] = p.reference;
    j["also_covers"] = p.also_covers;
    return j;
}

inline json advantage_json(const AdvantageQuery& q, const std::vector<YearAdvantage>& years) {
    json j;
    j["pair"] = pair_json(q.pair);
    j["platform"] = q.platform.name;
    j["time_limit_s"] = q.time_limit_s;
    j["horizon_year"] = q.horizon_year;
    j["quantum_constant"] = q.quantum_constant;
    j["classical_constant"] = q.classical_constant;
    j["qram_cap_enabled"] = q.qram_cap_enabled;
    j["params"] = json::object();
    const Env params = q.params();
    for (const auto& [k, v] : params.values()) j["params"][k] = v;
    const auto first = first_advantage_year(years, q.horizon_year);
    j["first_advantage_year"] = detail::opt_number(first.year);
    j["censored"] = first.censored();
    j["years"] = json::array();
    for (const auto& y : years) {
        json r;
        r["year"] = y.year;
        r["slowdown"] = detail::opt_number(y.slowdown);
        r["logical_qubits"] = y.logical_qubits;
        r["n_star"] = detail::size_json(y.n_star);
        r["n_max_time"] = detail::size_json(y.n_max_time);
        r["n_max_qubits"] = detail::size_json(y.n_max_qubits);
        if (y.region) {
            r["region"] = {{"lower_log10", y.region->lower_log10},
                           {"upper_log10", y.region->upper_log10},
                           {"lower", std::pow(10.0, y.region->lower_log10)},
                           {"upper", std::isfinite(std::pow(10.0, y.region->upper_log10))
                                         ? json(std::pow(10.0, y.region->upper_log10))
                                         : json(nullptr)}};
        } else {
            r["region"] = nullptr;
        }
        r["nonempty"] = y.nonempty();
        r["notes"] = y.notes;
        j["years"].push_back(std::move(r));
    }
    return j;
}

inline std::string sensitivity_csv(const std::vector<SweepResult>& results) {
    std::string out = "parameter,value,first_advantage_year\n";
    for (const auto& r : results)
        for (const auto& p : r.points)
            out += std::string(to_string(r.parameter)) + ',' + fmt("%.10g", p.value) + ',' +
                   (p.outcome ? first_year_cell(*p.outcome) : std::string("ERROR")) + '\n';
    return out;
}

inline json sensitivity_json(const AlgorithmPair& pair, const std::vector<SweepResult>& results) {
    json j;
    j["pair"] = pair.id;
    j["sweeps"] = json::array();
    for (const auto& r : results) {
        json s;
        s["parameter"] = std::string(to_string(r.parameter));
        s["points"] = json::array();
        for (const auto& p : r.points) {
            json pt;
            pt["value"] = p.value;
            if (p.outcome) {
                pt["first_advantage_year"] = detail::opt_number(p.outcome->year);
                pt["censored"] = p.outcome->censored();
                pt["horizon_year"] = p.outcome->horizon;
            } else {
                pt["error"] = p.error;
            }
            s["points"].push_back(std::move(pt));
        }
        j["sweeps"].push_back(std::move(s));
    }
    return j;
}

/// Advantage chart: log10 problem size against year with the crossover line,
/// both feasibility bounds and the shaded advantage region.
inline std::string advantage_svg(const std::string& title, const std::vector<YearAdvantage>& years) {
    const double W = 760, H = 480, ml = 70, mr = 190, mt = 40, mb = 50;
    const double pw = W - ml - mr, ph = H - mt - mb;
    if (years.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\"/>\n";

    const double x0 = years.front().year, x1 = std::max(years.back().year, x0 + 1);
    double ymax = 10;
    for (const auto& y : years)
        for (const auto* s : {&y.n_star, &y.n_max_time, &y.n_max_qubits})
            if (*s && !(*s)->capped) ymax = std::max(ymax, (*s)->log10_n);
    ymax = std::min(max_log10_size, std::ceil(ymax / 10.0) * 10.0 + 10.0);

    auto px = [&](double yr) { return ml + (yr - x0) / (x1 - x0) * pw; };
    auto py = [&](double lg) { return mt + ph - std::clamp(lg, 0.0, ymax) / ymax * ph; };
    auto f1 = [](double v) { return fmt("%.1f", v); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + f1(W) + "\" height=\"" + f1(H) + "\" viewBox=\"0 0 " +
         f1(W) + " " + f1(H) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + f1(ml) + "\" y=\"24\" font-size=\"15\">" + title + "</text>\n";

    // advantage region, one polygon per contiguous run of years
    for (std::size_t i = 0; i < years.size();) {
        if (!years[i].region) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < years.size() && years[j].region) ++j;
        std::string pts;
        for (std::size_t k = i; k < j; ++k)
            pts += f1(px(years[k].year)) + "," + f1(py(years[k].region->upper_log10)) + " ";
        for (std::size_t k = j; k-- > i;)
            pts += f1(px(years[k].year)) + "," + f1(py(years[k].region->lower_log10)) + " ";
        if (j - i == 1) { // single year: draw a thin band
            const double xa = px(years[i].year) - 3, xb = px(years[i].year) + 3;
            pts = f1(xa) + "," + f1(py(years[i].region->upper_log10)) + " " + f1(xb) + "," +
                  f1(py(years[i].region->upper_log10)) + " " + f1(xb) + "," + f1(py(years[i].region->lower_log10)) +
                  " " + f1(xa) + "," + f1(py(years[i].region->lower_log10));
        }
        s += "<polygon points=\"" + pts + "\" fill=\"#2ca02c\" fill-opacity=\"0.3\" stroke=\"none\"/>\n";
        i = j;
    }

    // axes and grid
    for (int t = 0; t <= 10; ++t) {
        const double lg = ymax * t / 10.0;
        s += "<line x1=\"" + f1(ml) + "\" y1=\"" + f1(py(lg)) + "\" x2=\"" + f1(ml + pw) + "\" y2=\"" + f1(py(lg)) +
             "\" stroke=\"#dddddd\"/>\n";
        s += "<text x=\"" + f1(ml - 6) + "\" y=\"" + f1(py(lg) + 4) + "\" text-anchor=\"end\">" + fmt("%.0f", lg) +
             "</text>\n";
    }
    const double span = x1 - x0;
    const double step = span > 40 ? 10 : span > 10 ? 5 : 1;
    for (double yr = std::ceil(x0 / step) * step; yr <= x1 + 1e-9; yr += step) {
        s += "<line x1=\"" + f1(px(yr)) + "\" y1=\"" + f1(mt + ph) + "\" x2=\"" + f1(px(yr)) + "\" y2=\"" +
             f1(mt + ph + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + f1(px(yr)) + "\" y=\"" + f1(mt + ph + 20) + "\" text-anchor=\"middle\">" +
             fmt("%.0f", yr) + "</text>\n";
    }
    s += "<rect x=\"" + f1(ml) + "\" y=\"" + f1(mt) + "\" width=\"" + f1(pw) + "\" height=\"" + f1(ph) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
    s += "<text x=\"" + f1(ml + pw / 2) + "\" y=\"" + f1(H - 10) + "\" text-anchor=\"middle\">year</text>\n";
    s += "<text transform=\"translate(18," + f1(mt + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">log10 problem size</text>\n";

    struct Series {
        const char* label;
        const char* color;
        const char* dash;
        std::optional<ProblemSize> YearAdvantage::*member;
    };
    const Series lines[] = {
        {"economic advantage (crossover)", "#ff7f0e", "", &YearAdvantage::n_star},
        {"time feasibility", "#d62728", "6,4", &YearAdvantage::n_max_time},
        {"qubit feasibility", "#1f77b4", "", &YearAdvantage::n_max_qubits},
    };
    for (const auto& line : lines) {
        std::string pts;
        auto flush = [&] {
            if (!pts.empty())
                s += std::string("<polyline points=\"") + pts + "\" fill=\"none\" stroke=\"" + line.color +
                     "\" stroke-width=\"2\"" + (*line.dash ? std::string(" stroke-dasharray=\"") + line.dash + "\"" : "") +
                     "/>\n";
            pts.clear();
        };
        for (const auto& y : years) {
            const auto& v = y.*line.member;
            if (!v) {
                flush();
                continue;
            }
            pts += f1(px(y.year)) + "," + f1(py(v->log10_n)) + " ";
        }
        flush();
    }

    // legend
    double ly = mt + 10;
    for (const auto& line : lines) {
        s += "<line x1=\"" + f1(ml + pw + 12) + "\" y1=\"" + f1(ly) + "\" x2=\"" + f1(ml + pw + 36) + "\" y2=\"" +
             f1(ly) + "\" stroke=\"" + line.color + "\" stroke-width=\"2\"" +
             (*line.dash ? std::string(" stroke-dasharray=\"") + line.dash + "\"" : "") + "/>\n";
        s += "<text x=\"" + f1(ml + pw + 42) + "\" y=\"" + f1(ly + 4) + "\">" + line.label + "</text>\n";
        ly += 20;
    }
    s += "<rect x=\"" + f1(ml + pw + 12) + "\" y=\"" + f1(ly - 6) +
         "\" width=\"24\" height=\"12\" fill=\"#2ca02c\" fill-opacity=\"0.3\"/>\n";
    s += "<text x=\"" + f1(ml + pw + 42) + "\" y=\"" + f1(ly + 4) + "\">advantage region</text>\n";
    s += "</svg>\n";
    return s;
}

} // namespace qea::report
