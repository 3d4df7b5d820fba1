// qea: command-line front end for fitting hardware trends and forecasting
// quantum economic advantage.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qea/cli.hpp"

namespace {

struct Flags {
    std::vector<std::string> data;
    std::string config;
    std::optional<std::string> platform;
    std::vector<std::string> pairs;
    std::optional<std::string> out;
    std::vector<std::string> format;
    std::optional<std::string> years;
    std::optional<double> time_limit_days;
    std::optional<double> horizon;
    std::optional<double> quantum_constant;
    std::optional<double> classical_constant;
    std::optional<double> classical_growth;
    bool qram_cap = false;
    std::optional<double> qubit_quantile;
    std::optional<double> error_quantile;
    std::vector<double> at;
    std::vector<std::string> sweep_params;
    std::vector<double> sweep_values;
    bool platforms = false;
    bool json = false;
};

void add_common(CLI::App* app, Flags& f) {
    app->add_option("--data", f.data, "Trend CSV file(s)");
    app->add_option("--config", f.config, "JSON run configuration")->check(CLI::ExistingFile);
    app->add_option("--platform", f.platform, "Platform preset or tag");
    app->add_option("--out", f.out, "Output directory");
    app->add_option("--format", f.format, "Comma-separated: csv,json,svg");
    app->add_option("--qubit-quantile", f.qubit_quantile, "Quantile for the qubit-count frontier");
    app->add_option("--error-quantile", f.error_quantile, "Quantile for the gate-error frontier");
}

void add_query(CLI::App* app, Flags& f) {
    app->add_option("--pair", f.pairs, "Algorithm pair id (repeatable)");
    app->add_option("--years", f.years, "Year range A:B[:STEP]");
    app->add_option("--time-limit-days", f.time_limit_days, "Wall-clock limit for a quantum run");
    app->add_option("--horizon", f.horizon, "Censoring horizon year");
    app->add_option("--quantum-constant", f.quantum_constant, "Multiplier on quantum cost");
    app->add_option("--classical-constant", f.classical_constant, "Multiplier on classical cost");
    app->add_option("--classical-growth", f.classical_growth, "Classical cost-efficiency growth, OOM/year");
    app->add_flag("--qram-cap", f.qram_cap, "Cap data size at 2^40 for pairs needing QRAM");
}

qea::cli::RunConfig resolve(const Flags& f) {
    qea::cli::RunConfig cfg;
    if (!f.config.empty()) cfg = qea::cli::load_config_file(f.config);
    if (!f.data.empty()) cfg.data_paths = f.data;
    if (f.platform) {
        cfg.platform = *f.platform;
        cfg.platform_explicit = true;
    }
    if (!f.pairs.empty()) cfg.pair_ids = f.pairs;
    if (f.out) cfg.out_dir = *f.out;
    if (!f.format.empty()) cfg.formats = qea::cli::parse_formats(f.format);
    if (f.years) cfg.years = qea::cli::parse_year_range(*f.years);
    if (f.time_limit_days) cfg.time_limit_s = *f.time_limit_days * 86400.0;
    if (f.horizon) cfg.horizon = *f.horizon;
    if (f.quantum_constant) cfg.quantum_constant = *f.quantum_constant;
    if (f.classical_constant) cfg.classical_constant = *f.classical_constant;
    if (f.classical_growth) cfg.classical.growth_oom_per_year = *f.classical_growth;
    if (f.qram_cap) cfg.qram_cap = true;
    if (f.qubit_quantile) cfg.qubit_quantile = *f.qubit_quantile;
    if (f.error_quantile) cfg.error_quantile = *f.error_quantile;
    if (!f.at.empty()) cfg.fit_years = f.at;
    if (!f.sweep_params.empty()) cfg.sweep_parameters = f.sweep_params;
    if (!f.sweep_values.empty()) cfg.sweep_values = f.sweep_values;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forecast when fault-tolerant quantum algorithms become cheaper than classical ones"};
    app.require_subcommand(1);
    Flags f;

    auto* fit = app.add_subcommand("fit-trends", "Fit log-linear frontiers to hardware trend data");
    add_common(fit, f);
    fit->add_option("--at", f.at, "Years to extrapolate each fit to");

    auto* adv = app.add_subcommand("advantage", "Feasible advantage region per year");
    add_common(adv, f);
    add_query(adv, f);

    auto* sens = app.add_subcommand("sensitivity", "Sweep one parameter at a time");
    add_common(sens, f);
    add_query(sens, f);
    sens->add_option("--param", f.sweep_params, "Parameter to sweep (repeatable)");
    sens->add_option("--values", f.sweep_values, "Explicit sweep values (ascending)");

    auto* cat = app.add_subcommand("catalog", "List algorithm pairs or platform presets");
    cat->add_flag("--platforms", f.platforms, "List platform presets instead");
    cat->add_flag("--json", f.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : qea::cli::config_error;
    }

    try {
        if (cat->parsed()) return qea::cli::cmd_catalog(f.platforms, f.json, std::cout);
        const auto cfg = resolve(f);
        if (fit->parsed()) return qea::cli::cmd_fit_trends(cfg, std::cout);
        if (adv->parsed()) return qea::cli::cmd_advantage(cfg, std::cout);
        if (sens->parsed()) return qea::cli::cmd_sensitivity(cfg, std::cout);
    } catch (const qea::InvariantViolation& e) {
        std::cerr << "error: invariant violated: " << e.what() << '\n';
        return qea::cli::internal_error;
    } catch (const qea::NonMonotoneError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qea::cli::internal_error;
    } catch (const qea::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qea::cli::config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qea::cli::internal_error;
    }
    return qea::cli::ok;
}
