// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qea/advantage.hpp"
#include "qea/catalog.hpp"
#include "qea/costlang.hpp"
#include "qea/hardware.hpp"
#include "qea/qec.hpp"
#include "qea/regress.hpp"
#include "qea/sensitivity.hpp"

using namespace qea;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Dataset bundled() {
    std::ifstream in(std::string(QEA_DATA_DIR) + "/sample_trends.csv", std::ios::binary);
    return load_records(in);
}

AdvantageQuery bundled_query(const std::string& id) {
    const auto platform = apply_trend_data(platform_by_name("superconducting"), bundled());
    return AdvantageQuery{pair_by_id(id), platform, ClassicalSpec{}, YearGrid{}};
}

Check grover_crossover() {
    Check c;
    const auto t0 = Clock::now();
    const auto n = crossover_size(pair_by_id("grover_search"), 1e13);
    const double dt = seconds_since(t0);
    c.require(n.has_value(), "no crossover");
    if (n) c.require(rel(n->linear(), 1e26) <= 1e-9, "n_star=" + std::to_string(n->linear()));
    c.require(dt < 0.010, "took " + std::to_string(dt * 1e3) + " ms");
    return c;
}

Check slowdown_reconstruction() {
    Check c;
    const auto& sc = platform_by_name("superconducting");
    const ClassicalSpec cl;
    const double q = quantum_rate(sc, sc.base_year), k = classical_rate(cl, sc.base_year);
    const double s = slowdown(sc, cl, sc.base_year);
    c.require(rel(q, 1.25e5) < 1e-9, "quantum rate " + std::to_string(q));
    c.require(rel(k, 2.4e18) < 1e-9, "classical rate " + std::to_string(k));
    c.require(std::log10(s) >= 12.5 && std::log10(s) <= 13.5, "slowdown " + std::to_string(s));
    return c;
}

Check surface_code_spot_values() {
    Check c;
    // direct evaluation of the overhead formula and the distance relation
    const double bracket = 4.0 * std::log10(std::sqrt(10.0) * 1e-3 / 1e-18) / std::log10(1e-2 / 1e-3) + 1.0;
    const double oracle_f = bracket * bracket;
    const double f = physical_per_logical(1e-3);
    c.require(rel(f, oracle_f) <= 1e-12, "f=" + std::to_string(f) + " oracle=" + std::to_string(oracle_f));
    c.require(rel(f, 3969.0) <= 1e-12, "f != 3969");
    const double oracle_d = std::ceil((std::sqrt(3969.0) + 1.0) / 2.0);
    c.require(code_distance(3969.0) == 32 && oracle_d == 32.0, "distance " + std::to_string(code_distance(3969.0)));
    return c;
}

Check reference_scenarios() {
    Check c;
    const auto t0 = Clock::now();
    for (const char* id : {"dense_matmul", "grover_search"}) {
        for (const auto& y : advantage_region(bundled_query(id)))
            if (y.year <= 2050 && y.nonempty()) c.require(false, std::string(id) + " non-empty in " + std::to_string(y.year));
    }
    const auto years = advantage_region(bundled_query("exponential_generic"));
    std::optional<double> first, threshold_year;
    for (const auto& y : years) {
        if (!first && y.nonempty()) first = y.year;
        if (!threshold_year && y.n_star &&
            y.logical_qubits >= static_cast<std::int64_t>(std::ceil(y.n_star->log10_n / std::log10(2.0))))
            threshold_year = y.year;
        if (first && !y.nonempty()) c.require(false, "exponential_generic region closes in " + std::to_string(y.year));
    }
    c.require(first.has_value(), "exponential_generic never advantageous");
    c.require(first == threshold_year, "first non-empty year differs from qubit-threshold year");
    const double dt = seconds_since(t0);
    c.require(dt < 10.0, "took " + std::to_string(dt) + " s");
    if (first) c.detail += (c.detail.empty() ? "" : "; ") + std::string("exponential_generic from ") + std::to_string(static_cast<int>(*first));
    return c;
}

Check closed_form_oracles() {
    Check c;
    for (double S : {1e6, 1e10, 1e13}) {
        const auto g = crossover_size(pair_by_id("grover_search"), S);
        c.require(g && rel(g->linear(), S * S) <= 1e-9, "grover S=" + std::to_string(S));
        const auto d = crossover_size(pair_by_id("dense_matmul"), S, 1, 1, Env{{"eps", 1}});
        c.require(d && rel(d->linear(), S) <= 1e-9, "dense_matmul S=" + std::to_string(S));
    }
    return c;
}

Check quantile_optimality() {
    Check c;
    std::mt19937_64 rng(20250101);
    std::uniform_real_distribution<double> year(2000, 2030), noise(-1.5, 1.5);
    for (double q : {0.2, 0.5, 0.9})
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<SeriesPoint> pts;
            for (int i = 0; i < 20; ++i) {
                const double y = 2000 + i + 0.5 * std::floor(year(rng) - 2000) / 30.0;
                pts.push_back({y, std::pow(10.0, 0.15 * (y - 2000) + noise(rng))});
            }
            const auto fit = fit_quantile(pts, q);
            double best = INFINITY;
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    if (pts[i].year == pts[j].year) continue;
                    const double yi = std::log10(pts[i].value), yj = std::log10(pts[j].value);
                    const double b = (yj - yi) / (pts[j].year - pts[i].year), a = yi - b * pts[i].year;
                    double loss = 0;
                    for (const auto& p : pts) {
                        const double r = std::log10(p.value) - (a + b * p.year);
                        loss += r > 0 ? q * r : (q - 1) * r;
                    }
                    best = std::min(best, loss);
                }
            const double got = pinball_loss(fit, pts, q);
            c.require(std::abs(got - best) <= 1e-12 * std::max(1.0, best), "loss mismatch q=" + std::to_string(q));
            int below = 0, above = 0;
            for (const auto& p : pts) {
                const double r = std::log10(p.value) - fit.log10_at(p.year);
                below += r < -1e-9;
                above += r > 1e-9;
            }
            const double n = static_cast<double>(pts.size());
            c.require(below <= std::ceil(q * n) + 1 && above <= std::ceil((1 - q) * n) + 1,
                      "coverage q=" + std::to_string(q));
        }
    return c;
}

Check sensitivity_monotonicity() {
    Check c;
    auto key = [](const SweepPoint& p) { return p.outcome ? p.outcome->sort_key() : NAN; };
    for (const char* id : {"exponential_generic", "qmeans"}) {
        const auto base = bundled_query(id);
        const auto q = sweep({base, SweepParameter::quantum_constant, default_constant_grid()});
        const auto k = sweep({base, SweepParameter::classical_constant, default_constant_grid()});
        for (std::size_t i = 1; i < q.points.size(); ++i) {
            c.require(key(q.points[i]) >= key(q.points[i - 1]), std::string(id) + " quantum_constant");
            c.require(key(k.points[i]) <= key(k.points[i - 1]), std::string(id) + " classical_constant");
        }
    }
    const auto base = bundled_query("dense_matmul");
    for (auto param : {SweepParameter::quantum_constant, SweepParameter::classical_constant})
        for (const auto& p : sweep({base, param, default_constant_grid()}).points)
            c.require(p.outcome && p.outcome->censored(), "dense_matmul not censored at " + std::to_string(p.value));
    return c;
}

Check parser_properties() {
    Check c;
    c.require(CostExpr::parse("2+3*2^2").evaluate({}).value == 14.0, "precedence");
    for (const auto& p : builtin_pairs())
        for (const auto* e : {&p.quantum_cost, &p.classical_cost}) {
            const auto again = CostExpr::parse(e->to_string());
            c.require(again == *e && again.to_string() == e->to_string(), "round trip " + p.id);
            double prev = -INFINITY;
            for (int i = 0; i <= 100; ++i) {
                const double lg = std::log10(2.0) + (40.0 - std::log10(2.0)) * i / 100.0;
                const double v = e->log10_cost(p.default_params, "n", lg);
                if (!(v > prev)) {
                    c.require(false, "not increasing: " + p.id + " " + e->text());
                    break;
                }
                prev = v;
            }
        }
    return c;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Check determinism() {
    Check c;
    const fs::path root = fs::temp_directory_path() / "qea_acceptance_determinism";
    fs::remove_all(root);
    const std::string data = std::string(QEA_DATA_DIR) + "/sample_trends.csv";
    std::vector<fs::path> runs = {root / "a", root / "b"};
    for (const auto& dir : runs) {
        for (const char* cmd : {"advantage", "sensitivity"}) {
            const std::string line = std::string("\"") + QEA_CLI + "\" " + cmd + " --data \"" + data + "\" --out \"" +
                                     dir.string() + "\" --format csv,json --pair exponential_generic --pair " +
                                     "grover_search --pair dense_matmul > /dev/null";
            const int rc = std::system(line.c_str());
            c.require(rc == 0, std::string(cmd) + " exited " + std::to_string(rc));
        }
    }
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(runs[0])) {
        const auto other = runs[1] / entry.path().filename();
        c.require(fs::exists(other), "missing " + other.string());
        if (fs::exists(other)) {
            c.require(slurp(entry.path()) == slurp(other), "differs: " + entry.path().filename().string());
            ++compared;
        }
    }
    c.require(compared == 12, "compared " + std::to_string(compared) + " files");
    fs::remove_all(root);
    return c;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"1 grover crossover at S=1e13 is 1e26, under 10 ms", grover_crossover},
        {"2 default rates and slowdown", slowdown_reconstruction},
        {"3 surface-code overhead 3969 and distance 32", surface_code_spot_values},
        {"4 reference scenarios on bundled data", reference_scenarios},
        {"5 crossover matches closed forms", closed_form_oracles},
        {"6 quantile fit optimality and coverage", quantile_optimality},
        {"7 sensitivity monotonicity", sensitivity_monotonicity},
        {"8 parser properties", parser_properties},
        {"9 deterministic CLI output", determinism},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        failures += !c.ok;
        std::cout << (c.ok ? "PASS " : "FAIL ") << name << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    }
    return failures == 0 ? 0 : 1;
}
