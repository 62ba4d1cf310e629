#pragma once

#include <cstddef>
#include <limits>

#include "aco/colony.hpp"
#include "aco/config.hpp"
#include "aco/pheromone.hpp"
#include "aco/rng.hpp"
#include "aco/tour.hpp"

namespace aco {

/// Global-only update of the modified elite ant system.
///
/// Best-tour edges gain w+ * Q / L_best, then worst-tour edges are multiplied
/// by (1 - w-). An edge on both tours receives the gain before the penalty.
/// The floor is applied last. Evaporation is not part of this step.
///
/// Throws std::invalid_argument if the tours do not match the matrix size or
/// best is longer than worst.
void global_update_meas(PheromoneMatrix& ph, const Tour& best, const Tour& worst, double reinforce_weight,
                        double penalty_weight, double q);

/// Tracks how long the global best has gone without meaningful progress.
///
/// Progress means the best length dropped by more than the relative
/// tolerance below the reference recorded at the last progress (or reset).
/// Smaller gains accumulate against that reference instead of resetting it.
class StagnationMonitor {
public:
    StagnationMonitor(std::size_t window, double tolerance,
                      double initial_best = std::numeric_limits<double>::infinity());

    std::size_t window() const { return window_; }
    double reference_best() const { return reference_; }
    std::size_t iterations_since_improvement() const { return stalled_; }

    /// Returns true once `window` consecutive calls saw no progress, then
    /// restarts the count from the current best.
    bool update(double current_best);

private:
    std::size_t window_;
    double tolerance_;
    double reference_;
    std::size_t stalled_ = 0;
};

/// Per-iteration stagnation check; see StagnationMonitor::update. The
/// iteration number is accepted for call-site symmetry with the run loop.
bool detect_stagnation(StagnationMonitor& mon, double current_best, std::size_t iteration);

/// Smooths the trail toward its initial level:
///   tau <- (1 - lambda) tau + lambda tau_init
/// lambda = 1 is a full reset. For lambda < 1 the ordering of entries is kept.
void escape(PheromoneMatrix& ph, double blend);

/// Modified elite ant system. Each iteration constructs m tours, evaporates,
/// applies global_update_meas with the configured best/worst scopes, and
/// smooths the trail whenever the stagnation monitor fires. No per-ant
/// deposits are made.
RunResult run_meas(const Instance& inst, const ColonyConfig& cfg, Rng& rng, const RunHooks& hooks = {});

}  // namespace aco
