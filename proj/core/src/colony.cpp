#include "aco/colony.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#include "aco/construction.hpp"
#include "aco/meas.hpp"

namespace aco {

namespace detail {

RunResult run_colony(const Instance& inst, const ColonyConfig& cfg, Rng& rng, const RunHooks& hooks,
                     const UpdatePolicy& policy) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();
    const std::size_t n = inst.size();

    RunResult result;
    result.best_tour.length = std::numeric_limits<double>::infinity();
    result.best_history.reserve(cfg.max_iterations);
    result.worst_history.reserve(cfg.max_iterations);
    Tour global_worst{{}, -std::numeric_limits<double>::infinity()};

    PheromoneMatrix ph = init_pheromone(inst, cfg);
    ChoiceTable table(inst, cfg);
    result.clamped_edges = table.clamped_edges();

    std::vector<Tour> tours(cfg.ants);
    std::uint64_t start_counter = 0;

    for (std::size_t iter = 1; iter <= cfg.max_iterations; ++iter) {
        table.refresh(ph);
        for (auto& tour : tours) {
            const Node start = cfg.random_starts ? static_cast<Node>(rng.below(n))
                                                 : static_cast<Node>(start_counter++ % n);
            tour = construct_tour(inst, table, start, rng);
        }
        result.evaluations += tours.size();

        std::size_t best_k = 0;
        std::size_t worst_k = 0;
        for (std::size_t k = 1; k < tours.size(); ++k) {
            if (tours[k].length < tours[best_k].length) {
                best_k = k;
            }
            if (tours[k].length > tours[worst_k].length) {
                worst_k = k;
            }
        }
        result.best_history.push_back(tours[best_k].length);
        result.worst_history.push_back(tours[worst_k].length);
        if (tours[best_k].length < result.best_tour.length) {
            result.best_tour = tours[best_k];
            result.last_improvement_iter = iter;
        }
        if (tours[worst_k].length > global_worst.length) {
            global_worst = tours[worst_k];
        }

        const IterationView view{iter, tours, tours[best_k], tours[worst_k], result.best_tour, global_worst};
        policy(ph, view, result);

        if (hooks.on_iteration) {
            hooks.on_iteration(iter, ph);
        }
    }

    result.updates = ph.counters();
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace detail

RunResult run_as(const Instance& inst, const ColonyConfig& cfg, Rng& rng, const RunHooks& hooks) {
    return detail::run_colony(inst, cfg, rng, hooks,
                              [&](PheromoneMatrix& ph, const detail::IterationView& view, RunResult&) {
                                  evaporate(ph, cfg.rho);
                                  if (!hooks.skip_ant_deposits) {
                                      deposit_as(ph, view.tours, cfg.q_deposit);
                                  }
                              });
}

RunResult run_eas(const Instance& inst, const ColonyConfig& cfg, Rng& rng, const RunHooks& hooks) {
    return detail::run_colony(inst, cfg, rng, hooks,
                              [&](PheromoneMatrix& ph, const detail::IterationView& view, RunResult&) {
                                  evaporate(ph, cfg.rho);
                                  if (!hooks.skip_ant_deposits) {
                                      deposit_as(ph, view.tours, cfg.q_deposit);
                                  }
                                  deposit_elite(ph, view.global_best, cfg.elite_weight, cfg.q_deposit);
                              });
}

RunResult run_algorithm(Algorithm algo, const Instance& inst, const ColonyConfig& cfg, const RunHooks& hooks) {
    Rng rng(cfg.seed);
    switch (algo) {
        case Algorithm::AS:
            return run_as(inst, cfg, rng, hooks);
        case Algorithm::EAS:
            return run_eas(inst, cfg, rng, hooks);
        case Algorithm::MEAS:
            return run_meas(inst, cfg, rng, hooks);
    }
    throw std::logic_error("unhandled algorithm");
}

}  // namespace aco
