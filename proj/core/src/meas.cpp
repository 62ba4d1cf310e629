#include "aco/meas.hpp"

#include <cmath>
#include <stdexcept>

namespace aco {

void global_update_meas(PheromoneMatrix& ph, const Tour& best, const Tour& worst, double reinforce_weight,
                        double penalty_weight, double q) {
    if (best.order.size() != ph.size() || worst.order.size() != ph.size()) {
        throw std::invalid_argument("tour dimension does not match the pheromone matrix");
    }
    if (best.length > worst.length) {
        throw std::invalid_argument("best tour is longer than worst tour");
    }
    if (penalty_weight < 0.0 || penalty_weight >= 1.0) {
        throw std::invalid_argument("penalty weight must lie in [0, 1)");
    }

    const double gain = reinforce_weight * q / best.length;
    for (const auto& [i, j] : tour_edges(best.order)) {
        ph.add(i, j, gain);
    }
    ++ph.counters().reinforcements;

    const double keep = 1.0 - penalty_weight;
    for (const auto& [i, j] : tour_edges(worst.order)) {
        ph.scale(i, j, keep);
    }
    ++ph.counters().penalties;
}

StagnationMonitor::StagnationMonitor(std::size_t window, double tolerance, double initial_best)
    : window_(window), tolerance_(tolerance), reference_(initial_best) {
    if (window == 0) {
        throw std::invalid_argument("stagnation window must be >= 1");
    }
    if (!(tolerance >= 0.0)) {
        throw std::invalid_argument("improvement tolerance must be >= 0");
    }
}

bool StagnationMonitor::update(double current_best) {
    bool improved = false;
    if (std::isinf(reference_)) {
        improved = current_best < reference_;
    } else if (reference_ > 0.0) {
        improved = (reference_ - current_best) / reference_ > tolerance_;
    }
    if (improved) {
        reference_ = current_best;
        stalled_ = 0;
        return false;
    }
    if (window_ == MeasParams::kNeverEscape) {
        return false;
    }
    if (++stalled_ >= window_) {
        stalled_ = 0;
        reference_ = current_best;
        return true;
    }
    return false;
}

bool detect_stagnation(StagnationMonitor& mon, double current_best, std::size_t /*iteration*/) {
    return mon.update(current_best);
}

void escape(PheromoneMatrix& ph, double blend) {
    if (!(blend > 0.0) || blend > 1.0) {
        throw std::invalid_argument("escape blend must lie in (0, 1]");
    }
    const double target = blend * ph.tau_init();
    const double keep = 1.0 - blend;
    ph.transform_all([=](double tau) { return keep * tau + target; });
    ++ph.counters().escapes;
}

RunResult run_meas(const Instance& inst, const ColonyConfig& cfg, Rng& rng, const RunHooks& hooks) {
    const MeasParams& p = cfg.meas;
    const double reinforce = cfg.reinforce_weight();
    if (!(reinforce > 0.0)) {
        throw std::invalid_argument("reinforce weight must be > 0");
    }
    StagnationMonitor monitor(p.stagnation_window, p.improvement_tolerance);

    return detail::run_colony(
        inst, cfg, rng, hooks, [&](PheromoneMatrix& ph, const detail::IterationView& view, RunResult& result) {
            evaporate(ph, cfg.rho);
            const Tour& best = p.best_scope == TourScope::Global ? view.global_best : view.iteration_best;
            const Tour& worst = p.worst_scope == TourScope::Iteration ? view.iteration_worst : view.global_worst;
            global_update_meas(ph, best, worst, reinforce, p.penalty_weight, cfg.q_deposit);
            if (detect_stagnation(monitor, view.global_best.length, view.iteration)) {
                escape(ph, p.escape_blend);
                ++result.escapes_triggered;
            }
        });
}

}  // namespace aco
