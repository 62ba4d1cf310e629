// acotsp: solve, benchmark and verify symmetric TSP instances with ant colony
// methods (AS, EAS, MEAS).
//
// Exit codes: 0 success, 1 usage error, 2 runtime or data error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "aco/bench.hpp"
#include "aco/colony.hpp"
#include "aco/csv.hpp"
#include "aco/format.hpp"
#include "aco/oracles.hpp"
#include "aco/tsplib.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kRuntime = 2;

/// Usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    std::string instance;
    std::string algo = "meas";
    std::uint64_t seed = 1;
    std::size_t iters = 1000;
    std::optional<std::size_t> ants;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> rho;
    std::optional<double> q;
    std::optional<double> elite;
    std::optional<double> w_plus;
    std::optional<double> w_minus;
    std::optional<std::string> stag_window;
    std::optional<double> tolerance;
    std::optional<double> escape_blend;
    bool random_starts = false;
    bool json = false;
};

struct SolveReport {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    double best_length = 0.0;
    std::vector<aco::Node> tour;
    std::size_t iterations_to_best = 0;
    std::size_t escapes = 0;
};

std::size_t parse_window(const std::string& text) {
    if (text == "inf" || text == "never") {
        return aco::MeasParams::kNeverEscape;
    }
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || v == 0) {
        throw UsageError("--stag-window expects a positive integer or 'inf'");
    }
    return static_cast<std::size_t>(v);
}

aco::ColonyConfig build_config(const SolveOptions& opt, aco::Algorithm algo, const aco::Instance& inst) {
    if (opt.elite && algo == aco::Algorithm::AS) {
        throw UsageError("--elite has no effect with --algo as");
    }
    const bool meas_flag = opt.w_plus || opt.w_minus || opt.stag_window || opt.tolerance || opt.escape_blend;
    if (meas_flag && algo != aco::Algorithm::MEAS) {
        throw UsageError("--w-plus, --w-minus, --stag-window, --tolerance and --escape-blend require --algo meas");
    }
    aco::ColonyConfig cfg = aco::default_config(inst);
    cfg.seed = opt.seed;
    cfg.max_iterations = opt.iters;
    cfg.random_starts = opt.random_starts;
    if (opt.ants) cfg.ants = *opt.ants;
    if (opt.alpha) cfg.alpha = *opt.alpha;
    if (opt.beta) cfg.beta = *opt.beta;
    if (opt.rho) cfg.rho = *opt.rho;
    if (opt.q) cfg.q_deposit = *opt.q;
    if (opt.elite) cfg.elite_weight = *opt.elite;
    if (opt.w_plus) cfg.meas.reinforce_weight = *opt.w_plus;
    if (opt.w_minus) cfg.meas.penalty_weight = *opt.w_minus;
    if (opt.stag_window) cfg.meas.stagnation_window = parse_window(*opt.stag_window);
    if (opt.tolerance) cfg.meas.improvement_tolerance = *opt.tolerance;
    if (opt.escape_blend) cfg.meas.escape_blend = *opt.escape_blend;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

std::string render_text(const SolveReport& r) {
    std::ostringstream out;
    out << "instance: " << r.instance << '\n';
    out << "algorithm: " << r.algorithm << '\n';
    out << "seed: " << r.seed << '\n';
    out << "best_length: " << aco::format_double(r.best_length) << '\n';
    out << "tour:";
    for (const auto v : r.tour) {
        out << ' ' << v;
    }
    out << '\n';
    out << "iterations_to_best: " << r.iterations_to_best << '\n';
    out << "escapes: " << r.escapes << '\n';
    return out.str();
}

std::string render_json(const SolveReport& r) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["algorithm"] = r.algorithm;
    j["seed"] = r.seed;
    j["best_length"] = r.best_length;
    j["tour"] = r.tour;
    j["iterations_to_best"] = r.iterations_to_best;
    j["escapes"] = r.escapes;
    return j.dump() + '\n';
}

int cmd_solve(const SolveOptions& opt) {
    aco::Algorithm algo{};
    try {
        algo = aco::parse_algorithm(opt.algo);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const aco::Instance inst = aco::load_tsplib(opt.instance);
    const aco::ColonyConfig cfg = build_config(opt, algo, inst);
    const aco::RunResult result = aco::run_algorithm(algo, inst, cfg);

    const SolveReport report{inst.name(),
                             std::string(aco::to_string(algo)),
                             cfg.seed,
                             result.best_tour.length,
                             result.best_tour.order,
                             result.last_improvement_iter,
                             result.escapes_triggered};
    std::cout << (opt.json ? render_json(report) : render_text(report));
    return kOk;
}

struct BenchOptions {
    std::string spec_path;
    std::vector<std::string> instances;
    std::vector<std::string> generated;
    std::string algos;
    std::optional<std::size_t> runs;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> iters;
    std::string optima;
    std::vector<std::string> overrides;
    std::optional<std::size_t> jobs;
    std::string out_dir = "bench_out";
};

aco::ExperimentSpec build_spec(const BenchOptions& opt) {
    aco::ExperimentSpec spec;
    std::ostringstream inline_spec;
    // Command-line paths are relative to the working directory, not the spec file.
    for (const auto& p : opt.instances) inline_spec << "instance = " << std::filesystem::absolute(p).string() << '\n';
    for (const auto& g : opt.generated) inline_spec << "generate = " << g << '\n';
    if (!opt.algos.empty()) inline_spec << "algorithms = " << opt.algos << '\n';
    if (opt.runs) inline_spec << "runs = " << *opt.runs << '\n';
    if (opt.seed) inline_spec << "base_seed = " << *opt.seed << '\n';
    if (opt.iters) inline_spec << "iters = " << *opt.iters << '\n';
    if (opt.jobs) inline_spec << "jobs = " << *opt.jobs << '\n';
    for (const auto& kv : opt.overrides) {
        if (kv.find('=') == std::string::npos) {
            throw UsageError("--set expects key=value, got '" + kv + "'");
        }
        inline_spec << kv << '\n';
    }

    std::string text;
    std::filesystem::path base_dir;
    if (!opt.spec_path.empty()) {
        std::ifstream in(opt.spec_path);
        if (!in) {
            throw std::runtime_error("cannot open bench spec " + opt.spec_path);
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str() + '\n';
        base_dir = std::filesystem::path(opt.spec_path).parent_path();
    }
    // Flags come after the file, so they win.
    text += inline_spec.str();
    try {
        spec = aco::parse_bench_spec(text, base_dir);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!opt.optima.empty()) {
        for (const auto& [name, len] : aco::load_optima(opt.optima)) {
            spec.known_optima[name] = len;
        }
    }
    if (spec.instances.empty()) {
        throw UsageError("bench needs at least one --instance, --gen or spec 'instance' entry");
    }
    return spec;
}

void print_summary_table(std::ostream& out, const std::vector<aco::CellStats>& cells) {
    out << std::left << std::setw(16) << "instance" << std::setw(6) << "algo" << std::right << std::setw(12) << "best"
        << std::setw(12) << "mean" << std::setw(10) << "std" << std::setw(10) << "rel_err" << std::setw(10)
        << "time_s" << std::setw(10) << "iters" << '\n';
    for (const auto& c : cells) {
        std::ostringstream rel;
        if (c.mean_relative_error) {
            rel << std::fixed << std::setprecision(4) << *c.mean_relative_error;
        } else {
            rel << '-';
        }
        out << std::left << std::setw(16) << c.instance << std::setw(6) << aco::to_string(c.algorithm) << std::right
            << std::fixed << std::setprecision(1) << std::setw(12) << c.best << std::setw(12) << c.mean
            << std::setw(10) << c.std << std::setw(10) << rel.str() << std::setprecision(3) << std::setw(10)
            << c.mean_time << std::setprecision(1) << std::setw(10) << c.mean_iterations_to_best << '\n';
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content) || !out.flush()) {
        throw std::runtime_error("cannot write " + path.string());
    }
}

int cmd_bench(const BenchOptions& opt) {
    const aco::ExperimentSpec spec = build_spec(opt);
    const aco::ExperimentResult result = aco::run_experiment(spec);
    const aco::CsvDocuments docs = aco::emit_csv(result.cells, result.runs);

    const std::filesystem::path dir(opt.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    }
    write_file(dir / "summary.csv", docs.summary);
    write_file(dir / "runs.csv", docs.runs);
    print_summary_table(std::cout, result.cells);
    return kOk;
}

int cmd_exact(const std::string& path) {
    const aco::Instance inst = aco::load_tsplib(path);
    if (inst.size() > aco::kHeldKarpMaxNodes) {
        throw UsageError("exact solving is limited to " + std::to_string(aco::kHeldKarpMaxNodes) +
                         " nodes; instance has " + std::to_string(inst.size()));
    }
    const aco::Tour hk = aco::held_karp_exact(inst);
    std::cout << "instance: " << inst.name() << '\n';
    std::cout << "optimal_length: " << aco::format_double(hk.length) << '\n';
    std::cout << "tour:";
    for (const auto v : hk.order) {
        std::cout << ' ' << v;
    }
    std::cout << '\n';
    if (inst.size() <= aco::kBruteForceMaxNodes) {
        const aco::Tour bf = aco::brute_force_optimum(inst);
        std::cout << "brute_force_length: " << aco::format_double(bf.length) << '\n';
        const bool agree = bf.length == hk.length;
        std::cout << "oracles_agree: " << (agree ? "yes" : "no") << '\n';
        if (!agree) {
            return kRuntime;
        }
    }
    return kOk;
}

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& out_path) {
    if (n < 2) {
        throw UsageError("--n must be at least 2");
    }
    const aco::Instance inst = aco::generate_uniform_instance(n, seed);
    const std::string text =
        aco::write_tsplib(inst, "uniform random points on [0,1000]^2, seed " + std::to_string(seed));
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ant colony TSP solver: AS, EAS and the modified elite ant system (MEAS)"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one TSPLIB instance");
    solve_cmd->add_option("instance", solve.instance, "TSPLIB file")->required();
    solve_cmd->add_option("--algo", solve.algo, "as | eas | meas")->capture_default_str();
    solve_cmd->add_option("--seed", solve.seed, "RNG seed")->capture_default_str();
    solve_cmd->add_option("--iters", solve.iters, "Iteration budget")->capture_default_str();
    solve_cmd->add_option("--ants", solve.ants, "Ants per iteration (default min(n, 50))");
    solve_cmd->add_option("--alpha", solve.alpha, "Pheromone exponent (default 1)");
    solve_cmd->add_option("--beta", solve.beta, "Visibility exponent (default 3)");
    solve_cmd->add_option("--rho", solve.rho, "Evaporation rate in [0,1] (default 0.1)");
    solve_cmd->add_option("--q", solve.q, "Deposit constant Q (default 1)");
    solve_cmd->add_option("--elite", solve.elite, "Elite weight e (default ceil(n/4)); eas and meas only");
    solve_cmd->add_option("--w-plus", solve.w_plus, "MEAS reinforcement weight (default: elite weight)");
    solve_cmd->add_option("--w-minus", solve.w_minus, "MEAS worst-tour penalty in [0,1) (default 0.2)");
    solve_cmd->add_option("--stag-window", solve.stag_window, "MEAS stagnation window, or 'inf' (default 30)");
    solve_cmd->add_option("--tolerance", solve.tolerance, "MEAS relative improvement tolerance (default 1e-6)");
    solve_cmd->add_option("--escape-blend", solve.escape_blend, "MEAS escape blend in (0,1] (default 0.5)");
    solve_cmd->add_flag("--random-starts", solve.random_starts, "Random start nodes instead of round-robin");
    solve_cmd->add_flag("--json", solve.json, "Single-line JSON output");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run a seeded multi-run comparison and write CSV files");
    bench_cmd->add_option("--spec", bench.spec_path, "key=value bench spec file");
    bench_cmd->add_option("--instance", bench.instances, "TSPLIB file (repeatable)");
    bench_cmd->add_option("--gen", bench.generated, "Generated instance n:seed (repeatable)");
    bench_cmd->add_option("--algos", bench.algos, "Comma-separated subset of as,eas,meas (default all)");
    bench_cmd->add_option("--runs", bench.runs, "Runs per cell (default 10)");
    bench_cmd->add_option("--seed", bench.seed, "Base seed (default 1)");
    bench_cmd->add_option("--iters", bench.iters, "Iteration budget (default 1000)");
    bench_cmd->add_option("--optima", bench.optima, "Optima sidecar file");
    bench_cmd->add_option("--set", bench.overrides, "Parameter override key=value or algo.key=value (repeatable)");
    bench_cmd->add_option("--jobs", bench.jobs, "Worker threads (default 1)");
    bench_cmd->add_option("--out", bench.out_dir, "Output directory")->capture_default_str();

    std::string exact_path;
    auto* exact_cmd = app.add_subcommand("exact", "Exact optimum via Held-Karp (n <= 18)");
    exact_cmd->add_option("instance", exact_path, "TSPLIB file")->required();

    std::size_t gen_n = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded uniform random EUC_2D instance");
    gen_cmd->add_option("--n", gen_n, "Node count")->required();
    gen_cmd->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "Output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve_cmd) {
            return cmd_solve(solve);
        }
        if (*bench_cmd) {
            return cmd_bench(bench);
        }
        if (*exact_cmd) {
            return cmd_exact(exact_path);
        }
        if (*gen_cmd) {
            return cmd_gen(gen_n, gen_seed, gen_out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kUsage;
}
