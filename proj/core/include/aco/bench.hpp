#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aco/config.hpp"
#include "aco/instance.hpp"

namespace aco {

/// Seeded uniform random instance, see generate_uniform_instance.
struct GeneratedInstance {
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

using InstanceSource = std::variant<std::filesystem::path, GeneratedInstance>;

/// Partial ColonyConfig; set fields replace the instance defaults.
struct ConfigOverrides {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> rho;
    std::optional<std::size_t> ants;
    std::optional<double> q_deposit;
    std::optional<double> elite_weight;
    std::optional<std::size_t> max_iterations;
    std::optional<bool> random_starts;
    std::optional<double> reinforce_weight;
    std::optional<double> penalty_weight;
    std::optional<std::size_t> stagnation_window;
    std::optional<double> improvement_tolerance;
    std::optional<double> escape_blend;

    void apply(ColonyConfig& cfg) const;
    /// Sets one field from its textual key (e.g. "alpha", "w_minus").
    /// Throws std::invalid_argument for an unknown key or bad value.
    void set(std::string_view key, std::string_view value);
};

struct ExperimentSpec {
    std::vector<InstanceSource> instances;
    std::vector<Algorithm> algorithms{Algorithm::AS, Algorithm::EAS, Algorithm::MEAS};
    std::size_t runs_per_cell = 10;
    std::uint64_t base_seed = 1;
    /// Applied to every algorithm before the per-algorithm overrides.
    ConfigOverrides common;
    std::map<Algorithm, ConfigOverrides> per_algorithm;
    /// Best-known lengths by instance name.
    std::map<std::string, double> known_optima;
    /// Worker threads; results do not depend on this value.
    std::size_t jobs = 1;

    void validate() const;
};

struct RunRecord {
    std::string instance;
    Algorithm algorithm = Algorithm::AS;
    std::uint64_t seed = 0;
    double best_length = 0.0;
    std::size_t iters_to_best = 0;
    std::size_t escapes = 0;
    double time_s = 0.0;
};

struct CellStats {
    std::string instance;
    Algorithm algorithm = Algorithm::AS;
    double best = 0.0;
    double mean = 0.0;
    /// Sample standard deviation of best-of-run lengths; 0 for a single run.
    double std = 0.0;
    /// Unset when no optimum is known for the instance.
    std::optional<double> mean_relative_error;
    double mean_time = 0.0;
    double mean_iterations_to_best = 0.0;
};

struct ExperimentResult {
    std::vector<CellStats> cells;
    std::vector<RunRecord> runs;
};

/// (found - optimum) / optimum. Throws std::domain_error when found beats
/// the optimum, which means the optima table or an oracle is wrong, and
/// std::invalid_argument when optimum is not positive.
double relative_error(double found, double optimum);

/// Reads an optima sidecar: "name length" per line, '#' starts a comment.
std::map<std::string, double> parse_optima(std::string_view text);
std::map<std::string, double> load_optima(const std::filesystem::path& path);

/// Resolves every instance, then runs each (instance, algorithm) cell with
/// seeds base_seed + 0 .. base_seed + R - 1. Rows follow instance order, then
/// algorithm order. Generated instances with n <= 18 and no table entry get
/// their optimum from held_karp_exact.
ExperimentResult run_experiment(const ExperimentSpec& spec);

/// Parses the key=value bench spec format. Recognised keys:
///   instance = <path>        (repeatable; relative to base_dir)
///   generate = <n>:<seed>    (repeatable)
///   algorithms = as,eas,meas
///   runs, base_seed, jobs, optima = <path>
///   <param> = <value>        applied to every algorithm
///   <algo>.<param> = <value> applied to one algorithm
/// Blank lines and '#' comments are ignored.
ExperimentSpec parse_bench_spec(std::string_view text, const std::filesystem::path& base_dir = {});

}  // namespace aco
