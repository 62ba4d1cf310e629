#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "aco/config.hpp"
#include "aco/instance.hpp"
#include "aco/pheromone.hpp"
#include "aco/rng.hpp"
#include "aco/tour.hpp"

namespace aco {

struct RunResult {
    Tour best_tour;
    /// Shortest and longest tour constructed in each iteration.
    std::vector<double> best_history;
    std::vector<double> worst_history;
    /// 1-based iteration in which best_tour was first found.
    std::size_t last_improvement_iter = 0;
    std::size_t escapes_triggered = 0;
    /// Tour constructions performed.
    std::uint64_t evaluations = 0;
    UpdateCounters updates;
    std::size_t clamped_edges = 0;
    /// Wall-clock duration; excluded from every determinism comparison.
    double elapsed_seconds = 0.0;
};

/// Optional instrumentation for a run.
struct RunHooks {
    /// Called after the pheromone update of every iteration (1-based).
    std::function<void(std::size_t iteration, const PheromoneMatrix&)> on_iteration;
    /// Suppresses the per-ant deposits of AS/EAS. Used to compare EAS's elite
    /// trajectory against the MEAS global update in isolation.
    bool skip_ant_deposits = false;
};

/// Ant System: every iteration constructs m tours, evaporates, then each
/// tour deposits Q / L on its edges.
RunResult run_as(const Instance& inst, const ColonyConfig& cfg, Rng& rng, const RunHooks& hooks = {});

/// Elite Ant System: Ant System plus e * Q / L_best on the global-best edges.
RunResult run_eas(const Instance& inst, const ColonyConfig& cfg, Rng& rng, const RunHooks& hooks = {});

/// Dispatches to run_as, run_eas or run_meas with a generator seeded from cfg.seed.
RunResult run_algorithm(Algorithm algo, const Instance& inst, const ColonyConfig& cfg,
                        const RunHooks& hooks = {});

namespace detail {

/// Per-iteration view handed to a pheromone update policy.
struct IterationView {
    std::size_t iteration;
    const std::vector<Tour>& tours;
    const Tour& iteration_best;
    const Tour& iteration_worst;
    const Tour& global_best;
    const Tour& global_worst;
};

using UpdatePolicy = std::function<void(PheromoneMatrix&, const IterationView&, RunResult&)>;

/// Shared construction loop; policy owns evaporation and every deposit.
RunResult run_colony(const Instance& inst, const ColonyConfig& cfg, Rng& rng, const RunHooks& hooks,
                     const UpdatePolicy& policy);

}  // namespace detail

}  // namespace aco
