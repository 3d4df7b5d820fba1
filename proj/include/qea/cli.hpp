#pragma once

// Run configuration and the subcommands behind the `qea` executable.
//
// A JSON config document may set any option; command-line flags override it.
//
//   {
//     "data": ["data/sample_trends.csv"],
//     "platform": "superconducting",
//     "platform_overrides": {"clock_hz": 2e6, "price_per_second": 1.6, "parallel_gate_lines": 10,
//                            "base_ec_slowdown": 100, "base_year": 2025, "p_th": 0.01, "p_L": 1e-18},
//     "classical": {"ops_per_machine_second": 2e15, "price_per_hour": 3.0,
//                   "growth_oom_per_year": 0.0, "base_year": 2025},
//     "pairs": ["grover_search", "my_pair"],
//     "custom_pairs": [{"id": "my_pair", "quantum_cost": "n^0.5*log2(n)", "classical_cost": "n",
//                       "default_params": {}, "qubit_requirement": "log2(n)", "requires_qram": false,
//                       "caveats": [], "description": "", "reference": ""}],
//     "params": {"eps": 0.5},
//     "years": "2025:2060", "time_limit_days": 30, "horizon": 2050,
//     "quantum_constant": 1, "classical_constant": 1, "qram_cap": false,
//     "qubit_quantile": 0.9, "error_quantile": 0.2,
//     "fit_years": [2030, 2040],
//     "sweep_parameters": ["quantum_constant"], "sweep_values": [0.001, 1, 1000],
//     "out": "qea_out", "format": ["csv", "json", "svg"]
//   }

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qea/advantage.hpp"
#include "qea/catalog.hpp"
#include "qea/errors.hpp"
#include "qea/regress.hpp"
#include "qea/report.hpp"
#include "qea/sensitivity.hpp"
#include "qea/trenddata.hpp"

namespace qea::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, config_error = 2, internal_error = 3 };

struct RunConfig {
    std::vector<std::string> data_paths;
    std::string platform = "superconducting";
    bool platform_explicit = false; ///< fit-trends filters to this platform only when set
    std::map<std::string, double> platform_overrides;
    ClassicalSpec classical;
    std::vector<std::string> pair_ids;
    std::vector<AlgorithmPair> custom_pairs;
    Env params;
    YearGrid years;
    double time_limit_s = seconds_per_month;
    double horizon = 2050;
    double quantum_constant = 1.0;
    double classical_constant = 1.0;
    bool qram_cap = false;
    double qubit_quantile = default_qubit_quantile;
    double error_quantile = default_error_quantile;
    std::vector<double> fit_years;
    std::vector<std::string> sweep_parameters;
    std::vector<double> sweep_values;
    std::string out_dir = "qea_out";
    std::set<std::string> formats = {"csv", "json"};
};

/// Parses "A:B" or "A:B:STEP".
inline YearGrid parse_year_range(std::string_view s) {
    YearGrid g;
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() < 2 || parts.size() > 3) throw ConfigError("year range must look like A:B or A:B:STEP");
    auto num = [&](const std::string& p) {
        auto v = qea::detail::parse_double(p);
        if (!v) throw ConfigError("bad number in year range: '" + p + "'");
        return *v;
    };
    g.first = num(parts[0]);
    g.last = num(parts[1]);
    if (parts.size() == 3) g.step = num(parts[2]);
    (void)g.years();
    return g;
}

inline std::set<std::string> parse_formats(const std::vector<std::string>& items) {
    std::set<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        std::string f;
        while (std::getline(ss, f, ',')) {
            if (f.empty()) continue;
            if (f != "csv" && f != "json" && f != "svg") throw ConfigError("unknown output format '" + f + "'");
            out.insert(f);
        }
    }
    if (out.empty()) throw ConfigError("at least one output format is required");
    return out;
}

inline AlgorithmPair pair_from_json(const json& j) {
    auto str = [&](const char* key, const std::string& def = "") {
        return j.contains(key) ? j.at(key).get<std::string>() : def;
    };
    if (!j.contains("id") || !j.contains("quantum_cost") || !j.contains("classical_cost"))
        throw ConfigError("custom pair needs id, quantum_cost and classical_cost");
    Env params;
    if (j.contains("default_params"))
        for (const auto& [k, v] : j.at("default_params").items()) params.set(k, v.get<double>());
    std::set<Caveat> caveats;
    if (j.contains("caveats"))
        for (const auto& c : j.at("caveats")) {
            auto cv = parse_caveat(c.get<std::string>());
            if (!cv) throw ConfigError("unknown caveat '" + c.get<std::string>() + "'");
            caveats.insert(*cv);
        }
    AlgorithmPair p{str("id"),
                    str("description"),
                    CostExpr::parse(str("quantum_cost")),
                    CostExpr::parse(str("classical_cost")),
                    params,
                    CostExpr::parse(str("qubit_requirement", "log2(n)")),
                    j.value("requires_qram", false),
                    caveats,
                    str("reference"),
                    {}};
    p.validate();
    return p;
}

/// Applies a JSON config document on top of `cfg`.
inline void apply_json(RunConfig& cfg, const json& j) {
    try {
        if (j.contains("data")) {
            cfg.data_paths.clear();
            if (j["data"].is_string())
                cfg.data_paths.push_back(j["data"].get<std::string>());
            else
                for (const auto& p : j["data"]) cfg.data_paths.push_back(p.get<std::string>());
        }
        if (j.contains("platform")) {
            cfg.platform = j["platform"].get<std::string>();
            cfg.platform_explicit = true;
        }
        if (j.contains("platform_overrides"))
            for (const auto& [k, v] : j["platform_overrides"].items()) cfg.platform_overrides[k] = v.get<double>();
        if (j.contains("classical")) {
            const auto& c = j["classical"];
            for (const auto& [k, v] : c.items()) {
                const double x = v.get<double>();
                if (k == "ops_per_machine_second")
                    cfg.classical.ops_per_machine_second = x;
                else if (k == "price_per_hour")
                    cfg.classical.price_per_hour = x;
                else if (k == "growth_oom_per_year")
                    cfg.classical.growth_oom_per_year = x;
                else if (k == "base_year")
                    cfg.classical.base_year = x;
                else
                    throw ConfigError("unknown classical field '" + k + "'");
            }
        }
        if (j.contains("custom_pairs"))
            for (const auto& p : j["custom_pairs"]) cfg.custom_pairs.push_back(pair_from_json(p));
        if (j.contains("pairs")) cfg.pair_ids = j["pairs"].get<std::vector<std::string>>();
        if (j.contains("params"))
            for (const auto& [k, v] : j["params"].items()) cfg.params.set(k, v.get<double>());
        if (j.contains("years")) cfg.years = parse_year_range(j["years"].get<std::string>());
        if (j.contains("time_limit_days")) cfg.time_limit_s = j["time_limit_days"].get<double>() * 86400.0;
        if (j.contains("horizon")) cfg.horizon = j["horizon"].get<double>();
        if (j.contains("quantum_constant")) cfg.quantum_constant = j["quantum_constant"].get<double>();
        if (j.contains("classical_constant")) cfg.classical_constant = j["classical_constant"].get<double>();
        if (j.contains("qram_cap")) cfg.qram_cap = j["qram_cap"].get<bool>();
        if (j.contains("qubit_quantile")) cfg.qubit_quantile = j["qubit_quantile"].get<double>();
        if (j.contains("error_quantile")) cfg.error_quantile = j["error_quantile"].get<double>();
        if (j.contains("fit_years")) cfg.fit_years = j["fit_years"].get<std::vector<double>>();
        if (j.contains("sweep_parameters")) cfg.sweep_parameters = j["sweep_parameters"].get<std::vector<std::string>>();
        if (j.contains("sweep_values")) cfg.sweep_values = j["sweep_values"].get<std::vector<double>>();
        if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
        if (j.contains("format")) cfg.formats = parse_formats(j["format"].get<std::vector<std::string>>());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

inline RunConfig load_config_file(const std::string& path, RunConfig cfg = {}) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    apply_json(cfg, j);
    return cfg;
}

inline Dataset load_data(const std::vector<std::string>& paths) {
    std::vector<TrendRecord> all;
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ConfigError("cannot open data file '" + path + "'");
        try {
            auto ds = load_records(in);
            all.insert(all.end(), ds.records().begin(), ds.records().end());
        } catch (const DataError& e) {
            throw DataError(e.line(), path + ": " + e.what());
        }
    }
    return Dataset(std::move(all));
}

/// Preset (or superconducting defaults for an unknown tag), refitted from
/// data when given, then explicit overrides.
inline PlatformSpec build_platform(const RunConfig& cfg, const Dataset& ds) {
    PlatformSpec spec;
    bool preset = std::any_of(builtin_platforms().begin(), builtin_platforms().end(),
                              [&](const auto& p) { return p.name == cfg.platform; });
    if (preset) {
        spec = platform_by_name(cfg.platform);
    } else {
        if (!valid_platform_tag(cfg.platform)) platform_by_name(cfg.platform); // throws with the preset list
        spec = platform_by_name("superconducting");
        spec.name = cfg.platform;
        for (Metric m : all_metrics)
            if (series(ds, cfg.platform, m).size() < 2)
                throw ConfigError("platform '" + cfg.platform + "' is not a preset and the data lacks " +
                                  std::string(to_string(m)) + " observations");
    }
    if (!ds.empty()) spec = apply_trend_data(spec, ds, cfg.qubit_quantile, cfg.error_quantile);
    for (const auto& [k, v] : cfg.platform_overrides) {
        if (k == "clock_hz")
            spec.clock_hz = v;
        else if (k == "price_per_second")
            spec.price_per_second = v;
        else if (k == "parallel_gate_lines")
            spec.parallel_gate_lines = v;
        else if (k == "base_ec_slowdown")
            spec.base_ec_slowdown = v;
        else if (k == "base_year")
            spec.base_year = v;
        else if (k == "p_th")
            spec.qec_params.p_th = v;
        else if (k == "p_L")
            spec.qec_params.p_L = v;
        else
            throw ConfigError("unknown platform override '" + k + "'");
    }
    spec.validate();
    return spec;
}

inline std::vector<AlgorithmPair> selected_pairs(const RunConfig& cfg, std::vector<std::string> fallback) {
    const auto& ids = cfg.pair_ids.empty() ? fallback : cfg.pair_ids;
    std::vector<AlgorithmPair> out;
    for (const auto& id : ids) {
        auto custom = std::find_if(cfg.custom_pairs.begin(), cfg.custom_pairs.end(),
                                   [&](const auto& p) { return p.id == id; });
        out.push_back(custom != cfg.custom_pairs.end() ? *custom : pair_by_id(id));
    }
    return out;
}

inline AdvantageQuery make_query(const RunConfig& cfg, const AlgorithmPair& pair, const PlatformSpec& platform) {
    AdvantageQuery q{pair, platform, cfg.classical, cfg.years, cfg.time_limit_s, cfg.horizon,
                     cfg.quantum_constant, cfg.classical_constant, cfg.params, cfg.qram_cap};
    q.validate();
    return q;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << content;
}

inline std::filesystem::path ensure_out_dir(const RunConfig& cfg) {
    std::filesystem::path dir(cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + cfg.out_dir + "': " + ec.message());
    return dir;
}

// ---------------------------------------------------------------------------

struct TrendFitRow {
    std::string platform;
    Metric metric;
    std::optional<LogLinearFit> fit;
    std::string status;
};

inline std::vector<TrendFitRow> fit_trend_rows(const RunConfig& cfg, const Dataset& ds) {
    std::vector<std::string> platforms = ds.platforms();
    std::vector<TrendFitRow> rows;
    for (const auto& pf : platforms) {
        for (Metric m : all_metrics) {
            TrendFitRow row{pf, m, std::nullopt, "ok"};
            const auto s = series(ds, pf, m);
            try {
                if (m == Metric::physical_qubits)
                    row.fit = fit_quantile(s, cfg.qubit_quantile);
                else if (m == Metric::two_qubit_gate_error)
                    row.fit = fit_quantile(s, cfg.error_quantile);
                else
                    row.fit = fit_least_squares(s);
            } catch (const FitError&) {
                row.status = "insufficient data";
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

/// Fits every (platform, metric) series in the data. Series that cannot be
/// fitted are reported as "insufficient data".
inline int cmd_fit_trends(const RunConfig& cfg, std::ostream& out) {
    if (cfg.data_paths.empty()) throw ConfigError("fit-trends needs --data");
    const Dataset ds = load_data(cfg.data_paths);
    auto rows = fit_trend_rows(cfg, ds);
    if (cfg.platform_explicit)
        std::erase_if(rows, [&](const auto& r) { return r.platform != cfg.platform; });

    std::string csv = "platform,metric,estimator,quantile,slope_oom_per_year,intercept_log10,n_points,status";
    for (double y : cfg.fit_years) csv += ",value_at_" + report::year_cell(y);
    csv += '\n';
    json j = json::array();
    for (const auto& r : rows) {
        const bool ls = r.metric == Metric::two_qubit_gate_time_s;
        const double q = r.metric == Metric::physical_qubits ? cfg.qubit_quantile : cfg.error_quantile;
        csv += r.platform + ',' + std::string(to_string(r.metric)) + ',' + (ls ? "least_squares" : "quantile") + ',' +
               (ls ? std::string() : report::fmt("%.10g", q)) + ',';
        json jr;
        jr["platform"] = r.platform;
        jr["metric"] = std::string(to_string(r.metric));
        jr["estimator"] = ls ? "least_squares" : "quantile";
        jr["quantile"] = ls ? json(nullptr) : json(q);
        jr["status"] = r.status;
        if (r.fit) {
            csv += report::fmt("%.12g", r.fit->slope_oom_per_year) + ',' + report::fmt("%.12g", r.fit->intercept_log10) +
                   ',' + std::to_string(r.fit->n_points) + ',' + r.status;
            jr["slope_oom_per_year"] = r.fit->slope_oom_per_year;
            jr["intercept_log10"] = r.fit->intercept_log10;
            jr["n_points"] = r.fit->n_points;
            jr["extrapolations"] = json::object();
            for (double y : cfg.fit_years) {
                const auto e = extrapolate(*r.fit, y);
                csv += ',' + report::fmt("%.6g", e.value);
                jr["extrapolations"][report::year_cell(y)] = e.overflow ? json(nullptr) : json(e.value);
            }
        } else {
            csv += ",,0," + r.status;
            for (std::size_t i = 0; i < cfg.fit_years.size(); ++i) csv += ',';
        }
        csv += '\n';
        j.push_back(std::move(jr));
    }

    const auto dir = ensure_out_dir(cfg);
    if (cfg.formats.count("csv")) write_file(dir / "trend_fits.csv", csv);
    if (cfg.formats.count("json")) write_file(dir / "trend_fits.json", j.dump(2) + "\n");
    out << csv;
    return ok;
}

/// Advantage regions for each selected pair. Defaults to the three reference
/// scenarios: exponential speedup, Grover search and dense matmul.
inline int cmd_advantage(const RunConfig& cfg, std::ostream& out) {
    const Dataset ds = load_data(cfg.data_paths);
    const PlatformSpec platform = build_platform(cfg, ds);
    const auto pairs = selected_pairs(cfg, {"exponential_generic", "grover_search", "dense_matmul"});

    struct Output {
        AdvantageQuery query;
        std::vector<YearAdvantage> years;
    };
    std::vector<Output> results;
    for (const auto& p : pairs) {
        auto q = make_query(cfg, p, platform);
        auto years = advantage_region(q);
        results.push_back({std::move(q), std::move(years)});
    }

    const auto dir = ensure_out_dir(cfg);
    for (const auto& r : results) {
        const auto& id = r.query.pair.id;
        if (cfg.formats.count("csv")) write_file(dir / ("advantage_" + id + ".csv"), report::advantage_csv(r.years));
        if (cfg.formats.count("json"))
            write_file(dir / ("advantage_" + id + ".json"), report::advantage_json(r.query, r.years).dump(2) + "\n");
        if (cfg.formats.count("svg"))
            write_file(dir / ("advantage_" + id + ".svg"),
                       report::advantage_svg(id + " on " + platform.name, r.years));
        const auto first = first_advantage_year(r.years, r.query.horizon_year);
        out << id << ": first advantage year " << report::first_year_cell(first) << '\n';
        for (const auto& y : r.years)
            for (const auto& note : y.notes) out << "  " << report::year_cell(y.year) << ": " << note << '\n';
    }
    return ok;
}

inline std::vector<double> default_sweep_values(const AdvantageQuery& q, SweepParameter p) {
    switch (p) {
    case SweepParameter::quantum_constant:
    case SweepParameter::classical_constant: return default_constant_grid();
    case SweepParameter::time_limit_s: {
        std::vector<double> v = {86400.0, 604800.0, seconds_per_month, 7776000.0, 31536000.0};
        if (std::find(v.begin(), v.end(), q.time_limit_s) == v.end()) v.push_back(q.time_limit_s);
        std::sort(v.begin(), v.end());
        return v;
    }
    default: {
        const double cur = current_value(q, p);
        if (cur == 0.0) return default_rate_grid(0.2); // 0 .. 0.4 OOM/yr
        return default_rate_grid(cur);
    }
    }
}

/// One-at-a-time sweeps of the first advantage year for each selected pair.
inline int cmd_sensitivity(const RunConfig& cfg, std::ostream& out) {
    const Dataset ds = load_data(cfg.data_paths);
    const PlatformSpec platform = build_platform(cfg, ds);
    const auto pairs = selected_pairs(cfg, {"exponential_generic", "grover_search", "dense_matmul"});

    std::vector<SweepParameter> params;
    if (cfg.sweep_parameters.empty()) {
        params.assign(std::begin(all_sweep_parameters), std::end(all_sweep_parameters));
    } else {
        for (const auto& name : cfg.sweep_parameters) {
            auto p = parse_sweep_parameter(name);
            if (!p) throw ConfigError("unknown sweep parameter '" + name + "'");
            params.push_back(*p);
        }
    }
    if (!cfg.sweep_values.empty() && params.size() != 1)
        throw ConfigError("explicit sweep values need exactly one sweep parameter");

    std::vector<std::pair<AlgorithmPair, std::vector<SweepResult>>> all;
    for (const auto& pair : pairs) {
        const auto base = make_query(cfg, pair, platform);
        std::vector<SweepResult> results;
        for (auto p : params) {
            SweepSpec spec{base, p, cfg.sweep_values.empty() ? default_sweep_values(base, p) : cfg.sweep_values};
            results.push_back(sweep(spec));
        }
        all.emplace_back(pair, std::move(results));
    }

    const auto dir = ensure_out_dir(cfg);
    for (const auto& [pair, results] : all) {
        const std::string csv = report::sensitivity_csv(results);
        if (cfg.formats.count("csv")) write_file(dir / ("sensitivity_" + pair.id + ".csv"), csv);
        if (cfg.formats.count("json"))
            write_file(dir / ("sensitivity_" + pair.id + ".json"),
                       report::sensitivity_json(pair, results).dump(2) + "\n");
        out << "# " << pair.id << '\n' << csv;
    }
    return ok;
}

/// Lists built-in pairs, or platform presets with `platforms`.
inline int cmd_catalog(bool platforms, bool as_json, std::ostream& out) {
    if (platforms) {
        json j = json::array();
        std::string text = "name,gate_time_s,clock_hz,price_per_second,price_per_gate,parallel_gate_lines,"
                           "base_ec_slowdown,base_year,error_at_base_year,physical_qubits_at_base_year\n";
        for (const auto& p : builtin_platforms()) {
            const double err = extrapolate(p.error_fit, p.base_year).value;
            const double qubits = extrapolate(p.qubit_fit, p.base_year).value;
            text += p.name + ',' + report::fmt("%.6g", p.gate_time_s()) + ',' + report::fmt("%.6g", p.clock_hz) + ',' +
                    report::fmt("%.6g", p.price_per_second) + ',' + report::fmt("%.6g", p.price_per_gate()) + ',' +
                    report::fmt("%.6g", p.parallel_gate_lines) + ',' + report::fmt("%.6g", p.base_ec_slowdown) + ',' +
                    report::fmt("%.6g", p.base_year) + ',' + report::fmt("%.6g", err) + ',' +
                    report::fmt("%.6g", qubits) + '\n';
            j.push_back({{"name", p.name},
                         {"gate_time_s", p.gate_time_s()},
                         {"clock_hz", p.clock_hz},
                         {"price_per_second", p.price_per_second},
                         {"price_per_gate", p.price_per_gate()},
                         {"parallel_gate_lines", p.parallel_gate_lines},
                         {"base_ec_slowdown", p.base_ec_slowdown},
                         {"base_year", p.base_year},
                         {"error_slope_oom_per_year", p.error_fit.slope_oom_per_year},
                         {"qubit_slope_oom_per_year", p.qubit_fit.slope_oom_per_year},
                         {"gate_time_slope_oom_per_year", p.gate_time_fit.slope_oom_per_year}});
        }
        out << (as_json ? j.dump(2) + "\n" : text);
        return ok;
    }
    json j = json::array();
    std::string text = "id\tquantum_cost\tclassical_cost\trequires_qram\tcaveats\treference\n";
    for (const auto& p : builtin_pairs()) {
        std::string cav;
        for (auto c : p.caveats) cav += (cav.empty() ? "" : "|") + std::string(to_string(c));
        text += p.id + '\t' + p.quantum_cost.text() + '\t' + p.classical_cost.text() + '\t' +
                (p.requires_qram ? "true" : "false") + '\t' + (cav.empty() ? "-" : cav) + '\t' + p.reference + '\n';
        j.push_back(report::pair_json(p));
    }
    out << (as_json ? j.dump(2) + "\n" : text);
    return ok;
}

} // namespace qea::cli
