#include <benchmark/benchmark.h>

#include <string>

#include "aco/colony.hpp"
#include "aco/construction.hpp"
#include "aco/meas.hpp"
#include "aco/oracles.hpp"
#include "aco/tsplib.hpp"

using namespace aco;

namespace {

const Instance& berlin52() {
    static const Instance inst = load_tsplib(ACO_SOURCE_DIR "/data/berlin52.tsp");
    return inst;
}

void BM_ConstructTour(benchmark::State& state) {
    const auto inst = generate_uniform_instance(static_cast<std::size_t>(state.range(0)), 1);
    const auto cfg = default_config(inst);
    const auto ph = init_pheromone(inst, cfg);
    ChoiceTable table(inst, cfg);
    table.refresh(ph);
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(construct_tour(inst, table, 0, rng));
    }
}
BENCHMARK(BM_ConstructTour)->Arg(10)->Arg(52)->Arg(200);

void BM_TransitionProbabilities(benchmark::State& state) {
    const auto& inst = berlin52();
    const auto cfg = default_config(inst);
    const auto ph = init_pheromone(inst, cfg);
    const AntState ant(inst.size(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(transition_probabilities(inst, ph, ant, cfg));
    }
}
BENCHMARK(BM_TransitionProbabilities);

void BM_HeldKarp(benchmark::State& state) {
    const auto inst = generate_uniform_instance(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(held_karp_exact(inst));
    }
}
BENCHMARK(BM_HeldKarp)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

// Whole runs divided by the iteration budget, so the counter reads per iteration.
void BM_RunIterations(benchmark::State& state) {
    const auto algo = static_cast<Algorithm>(state.range(0));
    const auto& inst = berlin52();
    auto cfg = default_config(inst);
    cfg.max_iterations = 20;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_algorithm(algo, inst, cfg));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.max_iterations));
    state.SetLabel(std::string(to_string(algo)));
}
BENCHMARK(BM_RunIterations)
    ->Arg(static_cast<int>(Algorithm::AS))
    ->Arg(static_cast<int>(Algorithm::EAS))
    ->Arg(static_cast<int>(Algorithm::MEAS))
    ->Unit(benchmark::kMillisecond);

void BM_GlobalUpdateMeas(benchmark::State& state) {
    const auto& inst = berlin52();
    const auto cfg = default_config(inst);
    PheromoneMatrix ph = init_pheromone(inst, cfg);
    const Tour best = nearest_neighbor_tour(inst, 0);
    const Tour worst = nearest_neighbor_tour(inst, 1);
    const Tour& lo = best.length <= worst.length ? best : worst;
    const Tour& hi = best.length <= worst.length ? worst : best;
    for (auto _ : state) {
        evaporate(ph, cfg.rho);
        global_update_meas(ph, lo, hi, cfg.reinforce_weight(), cfg.meas.penalty_weight, cfg.q_deposit);
    }
}
BENCHMARK(BM_GlobalUpdateMeas);

}  // namespace

BENCHMARK_MAIN();
