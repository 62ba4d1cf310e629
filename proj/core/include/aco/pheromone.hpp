#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aco/config.hpp"
#include "aco/instance.hpp"
#include "aco/tour.hpp"

namespace aco {

/// Counts of every kind of update applied to a pheromone matrix.
///
/// ant_deposits counts individual tours passed to deposit_as; the MEAS loop
/// must leave it at zero.
struct UpdateCounters {
    std::uint64_t evaporations = 0;
    std::uint64_t ant_deposits = 0;
    std::uint64_t elite_deposits = 0;
    std::uint64_t reinforcements = 0;
    std::uint64_t penalties = 0;
    std::uint64_t escapes = 0;
};

/// Symmetric trail matrix with a positive floor.
///
/// Every mutator writes (i, j) and (j, i) together and clamps to tau_min, so
/// the off-diagonal entries are symmetric and >= tau_min between calls. The
/// diagonal is unused and held at zero.
class PheromoneMatrix {
public:
    PheromoneMatrix(std::size_t n, double tau_init, double tau_min);

    std::size_t size() const { return n_; }
    double tau_init() const { return tau_init_; }
    double tau_min() const { return tau_min_; }

    double at(Node i, Node j) const { return tau_[i * n_ + j]; }
    std::span<const double> values() const { return tau_; }

    /// Sets both (i, j) and (j, i), clamped to the floor.
    void set(Node i, Node j, double value);
    void add(Node i, Node j, double delta) { set(i, j, at(i, j) + delta); }
    void scale(Node i, Node j, double factor) { set(i, j, at(i, j) * factor); }

    /// Applies f(tau) to every off-diagonal entry, then clamps to the floor.
    template <typename F>
    void transform_all(F&& f) {
        for (Node i = 0; i < n_; ++i) {
            for (Node j = i + 1; j < n_; ++j) {
                set(i, j, f(at(i, j)));
            }
        }
    }

    double min_off_diagonal() const;
    bool is_symmetric() const;

    UpdateCounters& counters() { return counters_; }
    const UpdateCounters& counters() const { return counters_; }

private:
    std::size_t n_;
    double tau_init_;
    double tau_min_;
    std::vector<double> tau_;
    UpdateCounters counters_;
};

/// Relative size of the floor with respect to the initial trail level.
inline constexpr double kTauFloorRatio = 1e-4;

/// Uniform trail tau0 = m / L_nn, with L_nn the nearest-neighbour tour length
/// from node 0, and floor tau0 * kTauFloorRatio.
PheromoneMatrix init_pheromone(const Instance& inst, const ColonyConfig& cfg);

/// tau <- max((1 - rho) tau, tau_min) on every entry.
void evaporate(PheromoneMatrix& ph, double rho);

/// Every tour adds Q / L to each of its edges.
void deposit_as(PheromoneMatrix& ph, std::span<const Tour> tours, double q);

/// The best tour adds e * Q / L_best to each of its edges.
void deposit_elite(PheromoneMatrix& ph, const Tour& best, double elite_weight, double q);

}  // namespace aco
