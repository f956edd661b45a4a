// jamgame: command-line surface for (n,k)-jamming game computations.
//
// Exit codes: 0 success, 1 computation error / table mismatch, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "jamming/closed_forms.hpp"
#include "jamming/game.hpp"
#include "jamming/montecarlo.hpp"
#include "jamming/optimize.hpp"

using json = nlohmann::json;
using namespace jamming;

namespace {

#ifndef JAMGAME_DATA_DIR
#define JAMGAME_DATA_DIR "data"
#endif

struct OutputOptions {
    std::string format = "text";  // text | json | csv
    std::string output;           // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", out.output, "Write to file instead of stdout");
}

/// Every run embeds its resolved configuration so results are traceable.
void write_result(const OutputOptions& out, const json& config,
                  const std::string& text_body, const json& payload) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.output.empty()) {
        file.open(out.output);
        if (!file) throw std::runtime_error("cannot open output file: " + out.output);
        os = &file;
    }
    if (out.format == "json") {
        json doc;
        doc["config"] = config;
        doc["result"] = payload;
        *os << doc.dump(2) << "\n";
    } else {
        *os << "# config: " << config.dump() << "\n" << text_body;
    }
}

std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

SafeSet parse_set(const std::string& csv) {
    SafeSet out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    std::sort(out.begin(), out.end());
    return out;
}

/// Resolve a frame by family name or file path.
Frame make_frame(const std::string& name, int n, int d, std::uint64_t seed) {
    if (n == 0) {  // derive n for families that determine it from d
        if (name == "simplex") n = d + 1;
        else if (name == "sic") n = d * d;
        else if (name == "mub") n = d * (d + 1);
        else throw std::invalid_argument("--n is required for family " + name);
    }
    if (name == "harmonic") return harmonic_frame(n, d);
    if (name == "simplex") {
        if (n != d + 1) throw UnsupportedDimension("simplex frame requires n = d+1");
        return simplex_frame(d);
    }
    if (name == "sic") {
        if (n != d * d) throw UnsupportedDimension("sic frame requires n = d^2");
        if (d == 4) return load_frame(std::string(JAMGAME_DATA_DIR) + "/sic_d4.json");
        return sic_frame(d);
    }
    if (name == "mub") {
        if (n != d * (d + 1)) throw UnsupportedDimension("mub frame requires n = d(d+1)");
        return mub_frame(d);
    }
    if (name == "alltop") return alltop_frame(n, d);
    if (name == "random") return random_haar_frame(n, d, seed);
    Frame f = load_frame(name);
    if (f.n != n || f.d != d) {
        throw ValidationError("frame file dimensions do not match the game");
    }
    return f;
}

// ---------------------------------------------------------------------------
// table reproduction

json load_targets(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open targets file: " + path);
    json j;
    in >> j;
    return j;
}

struct CellCheck {
    std::string label;
    double computed = 0.0;
    double target = 0.0;
    double tol = 0.0;
    bool pass = false;
};

CellCheck check_cell(const std::string& label, double computed, double target,
                     double tol) {
    return {label, computed, target, tol, std::abs(computed - target) <= tol};
}

/// Optimizer cells: falling short of the published value fails; finding a
/// better optimum does not.
CellCheck check_cell_min(const std::string& label, double computed, double target,
                         double tol) {
    return {label, computed, target, tol, computed >= target - tol};
}

/// Published ratio columns are quotients of the already-rounded omega
/// columns, so allow the rounding to propagate.
double ratio_tol(double base_tol, double wq, double wc) {
    return base_tol + 0.5e-4 * (1.0 + wq / wc) / wc;
}

double optimize_best(int n, int d, std::uint64_t seed) {
    OptimizeOptions opts;
    return optimize_seed(GameParams::make(n, n - d), opts, seed).best_value;
}

std::vector<CellCheck> run_table(const std::string& id, const json& targets,
                                 std::uint64_t seed) {
    const json& table = targets.at("tables").at(id);
    std::vector<CellCheck> checks;
    const double tol4 = 0.5e-4 + 1e-12;  // match at 4 printed decimals
    const double tol3 = 0.5e-3 + 1e-12;

    auto tag = [&](int n, int d, const std::string& col) {
        return id + " (" + std::to_string(n) + "," + std::to_string(d) + ") " + col;
    };

    if (id == "frame-comparison") {
        for (const auto& row : table.at("rows")) {
            int n = row[0], d = row[1], k = row[2];
            GameParams p = GameParams::make(n, k);
            checks.push_back(check_cell(tag(n, d, "classical"),
                                        classical_value(p).value, row[3], tol4));
            const char* frames[] = {"simplex", "harmonic", "mub", "sic", "alltop"};
            for (int i = 0; i < 5; ++i) {
                if (row[4 + i].is_null()) continue;
                double value = quantum_value(make_frame(frames[i], n, d, seed), p).omega;
                checks.push_back(check_cell(tag(n, d, frames[i]), value, row[4 + i], tol4));
            }
            checks.push_back(check_cell_min(tag(n, d, "opt"), optimize_best(n, d, seed),
                                            row[9], tol3));
        }
    } else if (id == "harmonic-advantage") {
        for (const auto& row : table.at("rows")) {
            int d = row[0], n = row[1];
            GameParams p = GameParams::make(n, n - d);
            double wq = quantum_value(harmonic_frame(n, d), p).omega;
            double wc = classical_value(p).value;
            checks.push_back(check_cell(tag(n, d, "omega_q"), wq, row[2], tol4));
            checks.push_back(check_cell(tag(n, d, "omega_c"), wc, row[3], tol4));
            checks.push_back(check_cell(tag(n, d, "ratio"), wq / wc, row[4],
                                        ratio_tol(tol3, wq, wc)));
        }
    } else if (id == "simplex-ratio") {
        for (const auto& row : table.at("rows")) {
            int d = row[0];
            GameParams p = GameParams::make(d + 1, 1);
            SimplexValue sv = simplex_value(d);
            double wc = classical_value(p).value;
            checks.push_back(check_cell(tag(d + 1, d, "mu"), sv.mu, row[1], tol4));
            checks.push_back(check_cell(tag(d + 1, d, "omega_q"), sv.omega, row[2], tol4));
            checks.push_back(check_cell(tag(d + 1, d, "omega_c"), wc, row[3], tol4));
            checks.push_back(check_cell(tag(d + 1, d, "ratio"), sv.omega / wc, row[4],
                                        ratio_tol(tol3, sv.omega, wc)));
        }
    } else if (id == "sic-advantage" || id == "mub-advantage") {
        const std::string family = id.substr(0, 3);
        for (const auto& row : table.at("rows")) {
            int d = row[0], n = row[1], k = row[2];
            GameParams p = GameParams::make(n, k);
            double wq = quantum_value(make_frame(family, n, d, seed), p).omega;
            double wc = classical_value(p).value;
            checks.push_back(check_cell(tag(n, d, "omega_q"), wq, row[3], tol4));
            checks.push_back(check_cell(tag(n, d, "omega_c"), wc, row[4], tol4));
            checks.push_back(check_cell(tag(n, d, "ratio"), wq / wc, row[5],
                                        ratio_tol(tol3, wq, wc)));
        }
    } else if (id == "ansatz-comparison") {
        OptimizeOptions opts;
        for (const auto& row : table.at("rows")) {
            int n = row[0], d = row[1];
            GameParams p = GameParams::make(n, n - d);
            double seed_val = optimize_seed(p, opts, seed).best_value;
            double gen_val = optimize_rank1(p, opts, seed).best_value;
            checks.push_back(check_cell(tag(n, d, "seed"), seed_val, row[2], tol3));
            checks.push_back(check_cell_min(tag(n, d, "general"), gen_val, row[3], tol3));
            // The general ansatz contains the seed ansatz, so it may only
            // fall below it by optimizer noise; exceeding it is legitimate
            // (at (7,6) the unconstrained optimum reaches the classical
            // value from some starts).
            checks.push_back(check_cell_min(tag(n, d, "gap"), gen_val - seed_val, 0.0,
                                            std::max(row[4].get<double>(), 1e-4)));
        }
    } else {
        throw CLI::ValidationError("--id", "unknown table id: " + id);
    }
    return checks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(n,k)-jamming games: classical and quantum values"};
    app.require_subcommand(1);

    int n = 0, k = 0, d = 0, j = 0;
    std::uint64_t seed = 0, samples = 100000;
    int threads = 0;  // 0 = library default; evaluation is deterministic
    double rank_tol = kDefaultRankTol;
    std::string frame_name = "harmonic", quantity = "alpha", method = "direct";
    std::string mode = "none", table_id, family = "harmonic", what, ansatz = "seed";
    std::string x_csv, y_csv, export_path, targets_path =
        std::string(JAMGAME_DATA_DIR) + "/published_targets.json";
    int a = 0, b = 0, n_min = 3, n_max = 20, restarts = 10;
    double tol = 1e-10;
    bool show_strategy = false;
    OutputOptions out;

    auto* c_classical = app.add_subcommand("classical", "Classical value omega_c(n,k)");
    c_classical->add_option("--n", n)->required();
    c_classical->add_option("--k", k)->required();
    c_classical->add_option("--brute-force", mode, "Cross-check: aligned|full")
        ->check(CLI::IsMember({"none", "aligned", "full"}));
    c_classical->add_flag("--strategy", show_strategy, "Print the greedy strategy table");
    add_output_flags(c_classical, out);

    auto* c_quantum = app.add_subcommand("quantum", "Quantum value of a seed-frame strategy");
    c_quantum->add_option("--n", n)->required();
    c_quantum->add_option("--k", k)->required();
    c_quantum->add_option("--frame", frame_name,
                          "harmonic|simplex|sic|mub|alltop|random|<file.json>");
    c_quantum->add_option("--seed", seed, "RNG seed (random frames)");
    c_quantum->add_option("--rank-tol", rank_tol);
    add_output_flags(c_quantum, out);

    auto* c_joint = app.add_subcommand("joint", "Joint outcome probability P(a,b|x,y)");
    c_joint->add_option("--n", n)->required();
    c_joint->add_option("--k", k)->required();
    c_joint->add_option("--frame", frame_name);
    c_joint->add_option("--x", x_csv, "Alice's safe set, e.g. 0,1")->required();
    c_joint->add_option("--y", y_csv, "Bob's safe set")->required();
    c_joint->add_option("--a", a)->required();
    c_joint->add_option("--b", b)->required();
    c_joint->add_option("--seed", seed);
    add_output_flags(c_joint, out);

    auto* c_decomp = app.add_subcommand("decompose", "Intersection-size decomposition of omega_q");
    c_decomp->add_option("--n", n)->required();
    c_decomp->add_option("--k", k)->required();
    c_decomp->add_option("--frame", frame_name);
    c_decomp->add_option("--seed", seed);
    add_output_flags(c_decomp, out);

    auto* c_mc = app.add_subcommand("montecarlo", "Haar-random estimates with standard errors");
    c_mc->add_option("--quantity", quantity, "alpha|alpha-pgm|lj|ewq")
        ->check(CLI::IsMember({"alpha", "alpha-pgm", "lj", "ewq"}));
    c_mc->add_option("--d", d);
    c_mc->add_option("--n", n);
    c_mc->add_option("--k", k);
    c_mc->add_option("--j", j, "Intersection size (lj)");
    c_mc->add_option("--samples", samples);
    c_mc->add_option("--seed", seed);
    c_mc->add_option("--method", method, "ewq estimator: direct|decomposed")
        ->check(CLI::IsMember({"direct", "decomposed"}));
    add_output_flags(c_mc, out);

    auto* c_opt = app.add_subcommand("optimize", "Maximize omega_q over strategies");
    c_opt->add_option("--n", n)->required();
    c_opt->add_option("--k", k)->required();
    c_opt->add_option("--ansatz", ansatz, "seed|rank1")
        ->check(CLI::IsMember({"seed", "rank1"}));
    c_opt->add_option("--restarts", restarts);
    c_opt->add_option("--tol", tol);
    c_opt->add_option("--seed", seed);
    c_opt->add_option("--export", export_path, "Save the best seed frame as JSON");
    add_output_flags(c_opt, out);

    auto* c_scan = app.add_subcommand("scan", "One frame family across a range of n");
    c_scan->add_option("--family", family)
        ->check(CLI::IsMember({"harmonic", "simplex", "sic", "mub", "alltop"}));
    c_scan->add_option("--d", d)->required();
    c_scan->add_option("--n-min", n_min);
    c_scan->add_option("--n-max", n_max);
    add_output_flags(c_scan, out);

    auto* c_table = app.add_subcommand("table", "Reproduce a published table against embedded targets");
    c_table->add_option("--id", table_id,
                        "frame-comparison|harmonic-advantage|simplex-ratio|"
                        "mub-advantage|sic-advantage|ansatz-comparison")
        ->required();
    c_table->add_option("--targets", targets_path, "Targets file override");
    c_table->add_option("--seed", seed);
    add_output_flags(c_table, out);

    auto* c_frame = app.add_subcommand("frame", "Construct a frame; report coherence");
    c_frame->add_option("--family", frame_name);
    c_frame->add_option("--n", n, "Optional for simplex/sic/mub (derived from d)");
    c_frame->add_option("--d", d)->required();
    c_frame->add_option("--seed", seed);
    c_frame->add_option("--export", export_path, "Save the frame as JSON");
    add_output_flags(c_frame, out);

    auto* c_const = app.add_subcommand("constants", "Asymptotic constants");
    add_output_flags(c_const, out);

    auto* c_emit = app.add_subcommand("emit", "CSV data behind the plots");
    c_emit->add_option("--what", what, "harmonic-ratio-curve|crossover-curve|overlap-profile")
        ->required()
        ->check(CLI::IsMember({"harmonic-ratio-curve", "crossover-curve", "overlap-profile"}));
    c_emit->add_option("--n", n, "overlap-profile: number of channels");
    c_emit->add_option("--n-min", n_min);
    c_emit->add_option("--n-max", n_max);
    c_emit->add_option("--d-min", n_min, "crossover-curve alias for the range");
    c_emit->add_option("--d-max", n_max);
    add_output_flags(c_emit, out);

    app.add_option("--threads", threads, "Worker count (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return 2;  // usage error
    }

    json config = {{"format", out.format}, {"seed", seed}, {"threads", threads}};

    try {
        if (*c_classical) {
            GameParams p = GameParams::make(n, k);
            ExactValue v = classical_value(p);
            config.update({{"command", "classical"}, {"n", n}, {"k", k}, {"brute_force", mode}});
            json payload = {{"n", n}, {"k", k}, {"d", p.d},
                            {"omega_c", v.value},
                            {"omega_c_exact", v.exact.str()}};
            std::string body = "omega_c(" + std::to_string(n) + "," + std::to_string(k) +
                               ") = " + fmt4(v.value) + "  (exact " + v.exact.str() + ")\n";
            if (mode != "none") {
                auto bf = brute_force_classical(
                    p, mode == "full" ? BruteForceMode::Full : BruteForceMode::Aligned);
                payload["brute_force"] = {{"mode", mode}, {"omega", bf.value.value},
                                          {"exact", bf.value.exact.str()}};
                body += "brute force (" + mode + ") = " + fmt4(bf.value.value) +
                        (bf.value.exact == v.exact ? "  [agrees]\n" : "  [MISMATCH]\n");
            }
            if (show_strategy) body += format_strategy(p, greedy_strategy(p));
            write_result(out, config, body, payload);
        } else if (*c_quantum) {
            GameParams p = GameParams::make(n, k);
            Frame f = make_frame(frame_name, n, p.d, seed);
            GameValue v = quantum_value(f, p, rank_tol);
            double wc = classical_value(p).value;
            config.update({{"command", "quantum"}, {"n", n}, {"k", k},
                           {"frame", frame_name}, {"rank_tol", rank_tol}});
            json payload = {{"n", n}, {"k", k}, {"d", p.d}, {"frame", f.label},
                            {"omega_q", v.omega}, {"omega_c", wc},
                            {"ratio", v.omega / wc}, {"method", v.method}};
            std::string body = "omega_q = " + fmt4(v.omega) + "  omega_c = " + fmt4(wc) +
                               "  ratio = " + fmt4(v.omega / wc) + "\n";
            write_result(out, config, body, payload);
        } else if (*c_joint) {
            GameParams p = GameParams::make(n, k);
            Frame f = make_frame(frame_name, n, p.d, seed);
            auto bases = all_bases(f, p);
            double prob = joint_probability(bases, parse_set(x_csv), parse_set(y_csv), a, b);
            config.update({{"command", "joint"}, {"n", n}, {"k", k}, {"frame", frame_name},
                           {"x", x_csv}, {"y", y_csv}, {"a", a}, {"b", b}});
            write_result(out, config,
                         "P(" + std::to_string(a) + "," + std::to_string(b) + "|x,y) = " +
                             fmt4(prob) + "\n",
                         {{"probability", prob}});
        } else if (*c_decomp) {
            GameParams p = GameParams::make(n, k);
            Frame f = make_frame(frame_name, n, p.d, seed);
            DecompositionReport rep = decompose_by_intersection(f, p);
            config.update({{"command", "decompose"}, {"n", n}, {"k", k}, {"frame", frame_name}});
            json rows = json::array();
            std::string body = "j  p(j)     mean|<v,v>|^2  pairs\n";
            for (const auto& row : rep.per_j) {
                rows.push_back({{"j", row.j}, {"weight", row.weight},
                                {"mean_sq_overlap", row.mean_sq_overlap},
                                {"pair_count", row.pair_count}});
                body += std::to_string(row.j) + "  " + fmt4(row.weight) + "   " +
                        fmt4(row.mean_sq_overlap) + "         " +
                        std::to_string(row.pair_count) + "\n";
            }
            body += "reconstructed omega_q = " + fmt4(rep.reconstructed_omega) + "\n";
            write_result(out, config, body,
                         {{"per_j", rows}, {"reconstructed_omega", rep.reconstructed_omega}});
        } else if (*c_mc) {
            EstimateResult est;
            if (quantity == "alpha") {
                est = estimate_alpha(d, samples, seed);
            } else if (quantity == "alpha-pgm") {
                est = estimate_alpha_via_pgm(d, samples, seed);
            } else if (quantity == "lj") {
                est = estimate_Lj(GameParams::make(n, k), j, samples, seed);
            } else {
                est = estimate_Ewq(GameParams::make(n, k), samples, seed,
                                   method == "direct" ? EwqMethod::Direct
                                                      : EwqMethod::Decomposed);
            }
            config.update({{"command", "montecarlo"}, {"quantity", quantity},
                           {"d", d}, {"n", n}, {"k", k}, {"j", j},
                           {"samples", samples}, {"method", method}});
            json payload = {{"quantity", est.quantity}, {"mean", est.mean},
                            {"stderr", est.stderr_}, {"samples", est.samples},
                            {"seed", est.seed}, {"resamples", est.resamples}};
            char buf[128];
            std::snprintf(buf, sizeof(buf), "%s = %.6f +- %.6f (stderr, %llu samples)\n",
                          est.quantity.c_str(), est.mean, est.stderr_,
                          static_cast<unsigned long long>(est.samples));
            write_result(out, config, buf, payload);
        } else if (*c_opt) {
            GameParams p = GameParams::make(n, k);
            OptimizeOptions opts;
            opts.restarts = restarts;
            opts.tol = tol;
            OptimizationResult res = ansatz == "seed" ? optimize_seed(p, opts, seed)
                                                      : optimize_rank1(p, opts, seed);
            config.update({{"command", "optimize"}, {"n", n}, {"k", k}, {"ansatz", ansatz},
                           {"restarts", restarts}, {"tol", tol}});
            json payload = {{"best_value", res.best_value},
                            {"per_restart_values", res.per_restart_values},
                            {"converged_restarts", res.converged_restarts}};
            if (ansatz == "seed" && !export_path.empty()) {
                save_frame(res.best_frame, export_path);
                payload["exported_frame"] = export_path;
            }
            std::string body = "best omega_q (" + ansatz + ") = " + fmt4(res.best_value) +
                               "  [" + std::to_string(res.converged_restarts) + "/" +
                               std::to_string(res.restarts) + " restarts converged]\n";
            write_result(out, config, body, payload);
        } else if (*c_scan) {
            auto rows = scan(family, d, n_min, n_max);
            config.update({{"command", "scan"}, {"family", family}, {"d", d},
                           {"n_min", n_min}, {"n_max", n_max}});
            json jrows = json::array();
            std::string body = "n,omega_q,omega_c,ratio\n";
            for (const auto& row : rows) {
                if (row.skipped) {
                    jrows.push_back({{"n", row.n}, {"skipped", true}, {"reason", row.reason}});
                    continue;
                }
                jrows.push_back({{"n", row.n}, {"omega_q", row.omega_q},
                                 {"omega_c", row.omega_c}, {"ratio", row.ratio}});
                body += std::to_string(row.n) + "," + fmt4(row.omega_q) + "," +
                        fmt4(row.omega_c) + "," + fmt4(row.ratio) + "\n";
            }
            write_result(out, config, body, jrows);
        } else if (*c_table) {
            auto checks = run_table(table_id, load_targets(targets_path), seed);
            config.update({{"command", "table"}, {"id", table_id}, {"targets", targets_path}});
            json jrows = json::array();
            std::string body;
            bool all_pass = true;
            for (const auto& c : checks) {
                all_pass = all_pass && c.pass;
                jrows.push_back({{"cell", c.label}, {"computed", c.computed},
                                 {"target", c.target}, {"tolerance", c.tol},
                                 {"pass", c.pass}});
                char buf[160];
                std::snprintf(buf, sizeof(buf), "%-40s computed %.6f target %.6f  %s\n",
                              c.label.c_str(), c.computed, c.target,
                              c.pass ? "pass" : "FAIL");
                body += buf;
            }
            body += all_pass ? "all cells match\n" : "MISMATCH\n";
            write_result(out, config, body, {{"cells", jrows}, {"all_pass", all_pass}});
            if (!all_pass) return 1;
        } else if (*c_frame) {
            Frame f = make_frame(frame_name, n, d, seed);
            double coh = coherence(f);
            config.update({{"command", "frame"}, {"family", frame_name}, {"n", n}, {"d", d}});
            json payload = {{"n", f.n}, {"d", f.d}, {"label", f.label},
                            {"coherence", coh},
                            {"welch_bound", std::sqrt(welch_bound_sq(f.n, f.d))}};
            if (!export_path.empty()) {
                save_frame(f, export_path);
                payload["exported"] = export_path;
            }
            std::string body = f.label + " frame: n=" + std::to_string(f.n) +
                               " d=" + std::to_string(f.d) + "  coherence=" + fmt4(coh) +
                               "  welch bound=" + fmt4(std::sqrt(welch_bound_sq(f.n, f.d))) + "\n";
            write_result(out, config, body, payload);
        } else if (*c_const) {
            AsymptoticConstants c = AsymptoticConstants::values();
            config["command"] = "constants";
            json payload = {{"montanaro_bound", c.montanaro_bound},
                            {"harmonic_limit", c.harmonic_limit},
                            {"large_d_ratio_bound", c.large_d_ratio_bound},
                            {"alpha_2", c.alpha_2}};
            std::string body;
            body += "montanaro_bound (64/(9 pi^2))   = " + std::to_string(c.montanaro_bound) + "\n";
            body += "harmonic_limit (3/4 + 3/pi^2)   = " + std::to_string(c.harmonic_limit) + "\n";
            body += "large_d_ratio_bound 2(8/3pi)^4  = " + std::to_string(c.large_d_ratio_bound) + "\n";
            body += "alpha_2 (5/6)                   = " + std::to_string(c.alpha_2) + "\n";
            write_result(out, config, body, payload);
        } else if (*c_emit) {
            config.update({{"command", "emit"}, {"what", what}});
            std::string body;
            json jrows = json::array();
            char buf[128];
            if (what == "harmonic-ratio-curve") {
                body = "n,omega_q,omega_c,ratio\n";
                for (int nn = std::max(n_min, 3); nn <= n_max; ++nn) {
                    double wq = harmonic_d2_value(nn);
                    double wc = classical_value_d2(nn).value;
                    std::snprintf(buf, sizeof(buf), "%d,%.12f,%.12f,%.12f\n", nn, wq, wc, wq / wc);
                    body += buf;
                    jrows.push_back({{"n", nn}, {"omega_q", wq}, {"omega_c", wc}, {"ratio", wq / wc}});
                }
            } else if (what == "crossover-curve") {
                body = "d,mu,advantage_margin\n";
                for (int dd = std::max(n_min, 2); dd <= n_max; ++dd) {
                    SimplexValue sv = simplex_value(dd);
                    double margin = (dd + 1) * sv.mu * sv.mu - dd;
                    std::snprintf(buf, sizeof(buf), "%d,%.12f,%.12f\n", dd, sv.mu, margin);
                    body += buf;
                    jrows.push_back({{"d", dd}, {"mu", sv.mu}, {"advantage_margin", margin}});
                }
            } else {  // overlap-profile
                if (n < 3) throw CLI::ValidationError("--n", "overlap-profile requires n >= 3");
                body = "delta,overlap_sq\n";
                for (int delta = 0; delta <= n - 2; ++delta) {
                    double v = cross_overlap_d2(n, 1, 1 + delta);
                    std::snprintf(buf, sizeof(buf), "%d,%.12f\n", delta, v);
                    body += buf;
                    jrows.push_back({{"delta", delta}, {"overlap_sq", v}});
                }
            }
            if (out.format == "json") {
                write_result(out, config, body, jrows);
            } else {
                write_result(out, config, body, jrows);
            }
        }
    } catch (const CLI::Error& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        json err = {{"error", e.what()}, {"config", config}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
