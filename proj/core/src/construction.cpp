#include "aco/construction.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aco {

namespace {

double heuristic_factor(double d, double beta, bool* clamped) {
    if (d <= 0.0) {
        d = kMinEdgeLength;
        if (clamped) {
            *clamped = true;
        }
    }
    return std::pow(1.0 / d, beta);
}

// Fills probs with the normalized feasible weights; visited entries are 0.
void normalize_feasible(std::span<const double> weights, const std::vector<bool>& visited,
                        std::vector<double>& probs) {
    const std::size_t n = weights.size();
    probs.assign(n, 0.0);
    double total = 0.0;
    std::size_t feasible = 0;
    for (Node j = 0; j < n; ++j) {
        if (!visited[j]) {
            total += weights[j];
            ++feasible;
        }
    }
    if (feasible == 0) {
        throw std::invalid_argument("no unvisited node left");
    }
    if (!(total > 0.0) || !std::isfinite(total)) {
        const double p = 1.0 / static_cast<double>(feasible);
        for (Node j = 0; j < n; ++j) {
            if (!visited[j]) {
                probs[j] = p;
            }
        }
        return;
    }
    for (Node j = 0; j < n; ++j) {
        if (!visited[j]) {
            probs[j] = weights[j] / total;
        }
    }
}

}  // namespace

AntState::AntState(std::size_t n, Node start) : visited_(n, false) {
    if (start >= n) {
        throw std::out_of_range("start node out of range");
    }
    order_.reserve(n);
    order_.push_back(start);
    visited_[start] = true;
}

void AntState::visit(Node j) {
    if (j >= visited_.size() || visited_[j]) {
        throw std::invalid_argument("node " + std::to_string(j) + " is not a feasible move");
    }
    visited_[j] = true;
    order_.push_back(j);
}

std::vector<double> transition_probabilities(const Instance& inst, const PheromoneMatrix& ph,
                                             const AntState& ant, const ColonyConfig& cfg,
                                             ConstructionDiagnostics* diag) {
    const std::size_t n = inst.size();
    const Node i = ant.current();
    std::vector<double> weights(n, 0.0);
    for (Node j = 0; j < n; ++j) {
        if (ant.visited(j)) {
            continue;
        }
        bool clamped = false;
        const double heur = heuristic_factor(inst.weight(i, j), cfg.beta, &clamped);
        if (clamped && diag) {
            ++diag->clamped_edges;
        }
        weights[j] = std::pow(ph.at(i, j), cfg.alpha) * heur;
    }
    std::vector<double> probs;
    normalize_feasible(weights, ant.visited_mask(), probs);
    return probs;
}

Node select_with_draw(std::span<const double> probabilities, double u) {
    Node last_positive = probabilities.size();
    double cumulative = 0.0;
    for (Node j = 0; j < probabilities.size(); ++j) {
        if (probabilities[j] > 0.0) {
            cumulative += probabilities[j];
            last_positive = j;
            if (cumulative > u) {
                return j;
            }
        }
    }
    if (last_positive == probabilities.size()) {
        throw std::invalid_argument("probability vector has no positive entry");
    }
    // Rounding left the cumulative sum just below u.
    return last_positive;
}

Node select_next(std::span<const double> probabilities, Rng& rng) {
    return select_with_draw(probabilities, rng.uniform());
}

ChoiceTable::ChoiceTable(const Instance& inst, const ColonyConfig& cfg)
    : n_(inst.size()), alpha_(cfg.alpha), heuristic_(n_ * n_, 0.0), weights_(n_ * n_, 0.0) {
    for (Node i = 0; i < n_; ++i) {
        for (Node j = 0; j < n_; ++j) {
            if (i == j) {
                continue;
            }
            bool clamped = false;
            heuristic_[i * n_ + j] = heuristic_factor(inst.weight(i, j), cfg.beta, &clamped);
            if (clamped) {
                ++clamped_;
            }
        }
    }
}

void ChoiceTable::refresh(const PheromoneMatrix& ph) {
    for (Node i = 0; i < n_; ++i) {
        for (Node j = 0; j < n_; ++j) {
            weights_[i * n_ + j] = i == j ? 0.0 : std::pow(ph.at(i, j), alpha_) * heuristic_[i * n_ + j];
        }
    }
}

Tour construct_tour(const Instance& inst, const ChoiceTable& table, Node start, Rng& rng) {
    const std::size_t n = inst.size();
    AntState ant(n, start);
    std::vector<double> probs;
    while (!ant.complete()) {
        normalize_feasible(table.row(ant.current()), ant.visited_mask(), probs);
        ant.visit(select_next(probs, rng));
    }
    std::vector<Node> order = std::move(ant).take_order();
    const double len = cycle_length_unchecked(inst, order);
    return Tour{std::move(order), len};
}

Tour construct_tour(const Instance& inst, const PheromoneMatrix& ph, const ColonyConfig& cfg, Node start,
                    Rng& rng) {
    ChoiceTable table(inst, cfg);
    table.refresh(ph);
    return construct_tour(inst, table, start, rng);
}

}  // namespace aco
