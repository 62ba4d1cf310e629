#include "aco/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aco/colony.hpp"
#include "aco/oracles.hpp"
#include "aco/tsplib.hpp"

namespace aco {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::string normalize_key(std::string_view key) {
    std::string out(trim(key));
    for (auto& c : out) {
        c = c == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

double to_double(std::string_view key, std::string_view text) {
    text = trim(text);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad number '" + std::string(text) + "' for " + std::string(key));
    }
    return v;
}

std::uint64_t to_uint(std::string_view key, std::string_view text) {
    text = trim(text);
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad integer '" + std::string(text) + "' for " + std::string(key));
    }
    return v;
}

bool to_bool(std::string_view key, std::string_view text) {
    const auto v = normalize_key(text);
    if (v == "1" || v == "true" || v == "yes") {
        return true;
    }
    if (v == "0" || v == "false" || v == "no") {
        return false;
    }
    throw std::invalid_argument("bad boolean '" + std::string(text) + "' for " + std::string(key));
}

struct ResolvedInstance {
    Instance instance;
    std::optional<double> optimum;
};

}  // namespace

void ConfigOverrides::apply(ColonyConfig& cfg) const {
    if (alpha) cfg.alpha = *alpha;
    if (beta) cfg.beta = *beta;
    if (rho) cfg.rho = *rho;
    if (ants) cfg.ants = *ants;
    if (q_deposit) cfg.q_deposit = *q_deposit;
    if (elite_weight) cfg.elite_weight = *elite_weight;
    if (max_iterations) cfg.max_iterations = *max_iterations;
    if (random_starts) cfg.random_starts = *random_starts;
    if (reinforce_weight) cfg.meas.reinforce_weight = *reinforce_weight;
    if (penalty_weight) cfg.meas.penalty_weight = *penalty_weight;
    if (stagnation_window) cfg.meas.stagnation_window = *stagnation_window;
    if (improvement_tolerance) cfg.meas.improvement_tolerance = *improvement_tolerance;
    if (escape_blend) cfg.meas.escape_blend = *escape_blend;
}

void ConfigOverrides::set(std::string_view raw_key, std::string_view value) {
    const std::string key = normalize_key(raw_key);
    if (key == "alpha") {
        alpha = to_double(key, value);
    } else if (key == "beta") {
        beta = to_double(key, value);
    } else if (key == "rho") {
        rho = to_double(key, value);
    } else if (key == "ants") {
        ants = to_uint(key, value);
    } else if (key == "q" || key == "q_deposit") {
        q_deposit = to_double(key, value);
    } else if (key == "elite") {
        elite_weight = to_double(key, value);
    } else if (key == "iters" || key == "iterations") {
        max_iterations = to_uint(key, value);
    } else if (key == "random_starts") {
        random_starts = to_bool(key, value);
    } else if (key == "w_plus") {
        reinforce_weight = to_double(key, value);
    } else if (key == "w_minus") {
        penalty_weight = to_double(key, value);
    } else if (key == "stag_window") {
        const auto v = normalize_key(value);
        stagnation_window = (v == "inf" || v == "never") ? MeasParams::kNeverEscape : to_uint(key, value);
    } else if (key == "tolerance" || key == "improvement_tolerance") {
        improvement_tolerance = to_double(key, value);
    } else if (key == "escape_blend") {
        escape_blend = to_double(key, value);
    } else {
        throw std::invalid_argument("unknown parameter '" + std::string(raw_key) + "'");
    }
}

void ExperimentSpec::validate() const {
    if (runs_per_cell < 1) {
        throw std::invalid_argument("runs per cell must be >= 1");
    }
    if (algorithms.empty()) {
        throw std::invalid_argument("no algorithms selected");
    }
    if (jobs < 1) {
        throw std::invalid_argument("jobs must be >= 1");
    }
}

double relative_error(double found, double optimum) {
    if (!(optimum > 0.0)) {
        throw std::invalid_argument("optimum must be positive");
    }
    const double err = (found - optimum) / optimum;
    if (err < 0.0) {
        throw std::domain_error("found length " + std::to_string(found) + " beats the recorded optimum " +
                                std::to_string(optimum) + "; optima table or oracle is wrong");
    }
    return err;
}

std::map<std::string, double> parse_optima(std::string_view text) {
    std::map<std::string, double> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string name;
        std::string value;
        if (!(fields >> name)) {
            continue;
        }
        std::string extra;
        if (!(fields >> value) || (fields >> extra)) {
            throw std::invalid_argument("optima line " + std::to_string(line_no) + ": expected 'name length'");
        }
        const double len = to_double("optimum", value);
        if (!(len > 0.0)) {
            throw std::invalid_argument("optima line " + std::to_string(line_no) + ": length must be positive");
        }
        out[name] = len;
    }
    return out;
}

std::map<std::string, double> load_optima(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open optima file " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_optima(ss.str());
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();

    // Every instance loads before the first run.
    std::vector<ResolvedInstance> instances;
    instances.reserve(spec.instances.size());
    for (const auto& source : spec.instances) {
        if (const auto* path = std::get_if<std::filesystem::path>(&source)) {
            instances.push_back({load_tsplib(*path), std::nullopt});
        } else {
            const auto& gen = std::get<GeneratedInstance>(source);
            instances.push_back({generate_uniform_instance(gen.n, gen.seed), std::nullopt});
        }
        auto& res = instances.back();
        if (const auto it = spec.known_optima.find(res.instance.name()); it != spec.known_optima.end()) {
            res.optimum = it->second;
        } else if (std::holds_alternative<GeneratedInstance>(source) && res.instance.size() <= kHeldKarpMaxNodes) {
            res.optimum = held_karp_exact(res.instance).length;
        }
    }

    std::vector<ColonyConfig> configs;
    struct Job {
        std::size_t instance;
        std::size_t cell;
        std::uint64_t seed;
        Algorithm algo;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (const Algorithm algo : spec.algorithms) {
            ColonyConfig cfg = default_config(instances[i].instance);
            spec.common.apply(cfg);
            if (const auto it = spec.per_algorithm.find(algo); it != spec.per_algorithm.end()) {
                it->second.apply(cfg);
            }
            cfg.validate();
            const std::size_t cell = configs.size();
            configs.push_back(cfg);
            for (std::size_t r = 0; r < spec.runs_per_cell; ++r) {
                jobs.push_back({i, cell, spec.base_seed + r, algo});
            }
        }
    }

    std::vector<RunRecord> runs(jobs.size());
    auto execute = [&](std::size_t idx) {
        const Job& job = jobs[idx];
        ColonyConfig cfg = configs[job.cell];
        cfg.seed = job.seed;
        const auto& inst = instances[job.instance].instance;
        const RunResult rr = run_algorithm(job.algo, inst, cfg);
        runs[idx] = RunRecord{inst.name(),           job.algo,           job.seed, rr.best_tour.length,
                              rr.last_improvement_iter, rr.escapes_triggered, rr.elapsed_seconds};
    };

    const std::size_t workers = std::min(spec.jobs, std::max<std::size_t>(jobs.size(), 1));
    if (workers <= 1) {
        for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
            execute(idx);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t idx = next++; idx < jobs.size(); idx = next++) {
                    try {
                        execute(idx);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        pool.clear();
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    ExperimentResult out;
    out.runs = runs;
    const std::size_t r_count = spec.runs_per_cell;
    for (std::size_t cell = 0; cell * r_count < runs.size(); ++cell) {
        const std::size_t first = cell * r_count;
        const auto& inst = instances[jobs[first].instance];
        CellStats stats;
        stats.instance = inst.instance.name();
        stats.algorithm = jobs[first].algo;
        stats.best = runs[first].best_length;
        double sum = 0.0;
        double time = 0.0;
        double iters = 0.0;
        for (std::size_t r = 0; r < r_count; ++r) {
            const auto& rec = runs[first + r];
            stats.best = std::min(stats.best, rec.best_length);
            sum += rec.best_length;
            time += rec.time_s;
            iters += static_cast<double>(rec.iters_to_best);
        }
        const double count = static_cast<double>(r_count);
        stats.mean = sum / count;
        stats.mean_time = time / count;
        stats.mean_iterations_to_best = iters / count;
        if (r_count > 1) {
            double sq = 0.0;
            for (std::size_t r = 0; r < r_count; ++r) {
                const double d = runs[first + r].best_length - stats.mean;
                sq += d * d;
            }
            stats.std = std::sqrt(sq / (count - 1.0));
        }
        if (inst.optimum) {
            double err = 0.0;
            for (std::size_t r = 0; r < r_count; ++r) {
                err += relative_error(runs[first + r].best_length, *inst.optimum);
            }
            stats.mean_relative_error = err / count;
        }
        out.cells.push_back(std::move(stats));
    }
    return out;
}

ExperimentSpec parse_bench_spec(std::string_view text, const std::filesystem::path& base_dir) {
    ExperimentSpec spec;
    std::optional<std::filesystem::path> optima_path;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("bench spec line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto body = trim(line);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            fail("expected key = value");
        }
        const std::string key = normalize_key(body.substr(0, eq));
        const auto value = trim(body.substr(eq + 1));
        try {
            if (key == "instance") {
                std::filesystem::path p{std::string(value)};
                spec.instances.emplace_back(p.is_relative() && !base_dir.empty() ? base_dir / p : p);
            } else if (key == "generate") {
                const auto colon = value.find(':');
                if (colon == std::string_view::npos) {
                    fail("generate expects <n>:<seed>");
                }
                spec.instances.emplace_back(GeneratedInstance{to_uint(key, value.substr(0, colon)),
                                                              to_uint(key, value.substr(colon + 1))});
            } else if (key == "algorithms") {
                spec.algorithms.clear();
                std::string_view rest = value;
                while (!rest.empty()) {
                    const auto comma = rest.find(',');
                    const auto item = trim(rest.substr(0, comma));
                    if (!item.empty()) {
                        spec.algorithms.push_back(parse_algorithm(item));
                    }
                    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
                }
            } else if (key == "runs") {
                spec.runs_per_cell = to_uint(key, value);
            } else if (key == "base_seed" || key == "seed") {
                spec.base_seed = to_uint(key, value);
            } else if (key == "jobs") {
                spec.jobs = to_uint(key, value);
            } else if (key == "optima") {
                std::filesystem::path p{std::string(value)};
                optima_path = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
            } else if (const auto dot = key.find('.'); dot != std::string::npos) {
                spec.per_algorithm[parse_algorithm(key.substr(0, dot))].set(key.substr(dot + 1), value);
            } else {
                spec.common.set(key, value);
            }
        } catch (const std::invalid_argument& e) {
            const std::string what = e.what();
            if (what.rfind("bench spec line", 0) == 0) {
                throw;
            }
            fail(what);
        }
    }
    if (optima_path) {
        spec.known_optima = load_optima(*optima_path);
    }
    spec.validate();
    return spec;
}

}  // namespace aco
