#include "aco/pheromone.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "aco/oracles.hpp"

namespace aco {

PheromoneMatrix::PheromoneMatrix(std::size_t n, double tau_init, double tau_min)
    : n_(n), tau_init_(tau_init), tau_min_(tau_min), tau_(n * n, tau_init) {
    if (!(tau_min > 0.0) || !(tau_init >= tau_min)) {
        throw std::invalid_argument("pheromone levels require 0 < tau_min <= tau_init");
    }
    for (Node i = 0; i < n_; ++i) {
        tau_[i * n_ + i] = 0.0;
    }
}

void PheromoneMatrix::set(Node i, Node j, double value) {
    const double v = std::max(value, tau_min_);
    tau_[i * n_ + j] = v;
    tau_[j * n_ + i] = v;
}

double PheromoneMatrix::min_off_diagonal() const {
    double lo = std::numeric_limits<double>::infinity();
    for (Node i = 0; i < n_; ++i) {
        for (Node j = 0; j < n_; ++j) {
            if (i != j) {
                lo = std::min(lo, at(i, j));
            }
        }
    }
    return lo;
}

bool PheromoneMatrix::is_symmetric() const {
    for (Node i = 0; i < n_; ++i) {
        for (Node j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i)) {
                return false;
            }
        }
    }
    return true;
}

PheromoneMatrix init_pheromone(const Instance& inst, const ColonyConfig& cfg) {
    const double l_nn = nearest_neighbor_tour(inst, 0).length;
    // All-coincident points give L_nn = 0; fall back to a unit trail.
    const double tau0 = l_nn > 0.0 ? static_cast<double>(cfg.ants) / l_nn : 1.0;
    return PheromoneMatrix(inst.size(), tau0, tau0 * kTauFloorRatio);
}

void evaporate(PheromoneMatrix& ph, double rho) {
    if (rho < 0.0 || rho > 1.0) {
        throw std::invalid_argument("rho must lie in [0, 1]");
    }
    const double keep = 1.0 - rho;
    ph.transform_all([keep](double tau) { return keep * tau; });
    ++ph.counters().evaporations;
}

void deposit_as(PheromoneMatrix& ph, std::span<const Tour> tours, double q) {
    for (const auto& tour : tours) {
        const double delta = q / tour.length;
        for (const auto& [i, j] : tour_edges(tour.order)) {
            ph.add(i, j, delta);
        }
        ++ph.counters().ant_deposits;
    }
}

void deposit_elite(PheromoneMatrix& ph, const Tour& best, double elite_weight, double q) {
    if (elite_weight == 0.0) {
        return;
    }
    const double delta = elite_weight * q / best.length;
    for (const auto& [i, j] : tour_edges(best.order)) {
        ph.add(i, j, delta);
    }
    ++ph.counters().elite_deposits;
}

}  // namespace aco
