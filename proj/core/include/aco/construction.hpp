#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "aco/config.hpp"
#include "aco/instance.hpp"
#include "aco/pheromone.hpp"
#include "aco/rng.hpp"
#include "aco/tour.hpp"

namespace aco {

/// Stand-in length for a zero-length edge between distinct nodes, which
/// would otherwise make the visibility 1/d infinite.
inline constexpr double kMinEdgeLength = 1e-10;

/// Position and memory of one ant during construction.
class AntState {
public:
    AntState(std::size_t n, Node start);

    Node current() const { return order_.back(); }
    bool visited(Node j) const { return visited_[j]; }
    const std::vector<bool>& visited_mask() const { return visited_; }
    std::size_t visited_count() const { return order_.size(); }
    bool complete() const { return order_.size() == visited_.size(); }
    const std::vector<Node>& partial_order() const { return order_; }

    /// Moves to j. Throws std::invalid_argument if j was already visited.
    void visit(Node j);

    std::vector<Node> take_order() && { return std::move(order_); }

private:
    std::vector<bool> visited_;
    std::vector<Node> order_;
};

struct ConstructionDiagnostics {
    /// Zero-distance edges whose visibility was computed with kMinEdgeLength.
    std::size_t clamped_edges = 0;
};

/// Transition probabilities from the ant's current node:
///   P[j] = tau_ij^alpha * eta_ij^beta / sum over unvisited u of the same,
/// with eta_ij = 1 / d_ij, and P[j] = 0 for visited j. If every feasible
/// weight underflows to zero the distribution falls back to uniform over the
/// unvisited nodes. Throws std::invalid_argument if no node is unvisited.
std::vector<double> transition_probabilities(const Instance& inst, const PheromoneMatrix& ph,
                                             const AntState& ant, const ColonyConfig& cfg,
                                             ConstructionDiagnostics* diag = nullptr);

/// Roulette-wheel choice for a given draw u in [0, 1): the first index whose
/// cumulative probability exceeds u. Throws std::invalid_argument when no
/// entry is positive.
Node select_with_draw(std::span<const double> probabilities, double u);

/// Draws u from rng and applies select_with_draw.
Node select_next(std::span<const double> probabilities, Rng& rng);

/// Cache of tau^alpha * eta^beta for every edge.
///
/// The heuristic factor is computed once per instance; refresh() recomputes
/// the products after the trail changes. Entries are bit-identical to the
/// numerators used by transition_probabilities.
class ChoiceTable {
public:
    ChoiceTable(const Instance& inst, const ColonyConfig& cfg);

    void refresh(const PheromoneMatrix& ph);
    std::span<const double> row(Node i) const { return {weights_.data() + i * n_, n_}; }
    std::size_t clamped_edges() const { return clamped_; }

private:
    std::size_t n_;
    double alpha_;
    std::vector<double> heuristic_;
    std::vector<double> weights_;
    std::size_t clamped_ = 0;
};

/// Builds one tour from start by repeated probabilistic moves.
Tour construct_tour(const Instance& inst, const ChoiceTable& table, Node start, Rng& rng);

/// Convenience form that builds a ChoiceTable for the current trail.
Tour construct_tour(const Instance& inst, const PheromoneMatrix& ph, const ColonyConfig& cfg, Node start,
                    Rng& rng);

}  // namespace aco
