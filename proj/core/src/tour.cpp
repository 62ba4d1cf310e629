#include "aco/tour.hpp"

#include <stdexcept>
#include <string>

namespace aco {

void validate_permutation(std::span<const Node> order, std::size_t n) {
    if (order.size() != n) {
        throw std::invalid_argument("tour has " + std::to_string(order.size()) + " nodes, expected " +
                                    std::to_string(n));
    }
    std::vector<bool> visited(n, false);
    for (const Node v : order) {
        if (v >= n) {
            throw std::invalid_argument("tour node " + std::to_string(v) + " out of range");
        }
        if (visited[v]) {
            throw std::invalid_argument("tour visits node " + std::to_string(v) + " twice");
        }
        visited[v] = true;
    }
}

double cycle_length_unchecked(const Instance& inst, std::span<const Node> order) {
    double total = 0.0;
    for (std::size_t t = 0; t + 1 < order.size(); ++t) {
        total += inst.weight(order[t], order[t + 1]);
    }
    total += inst.weight(order.back(), order.front());
    return total;
}

double tour_length(const Instance& inst, std::span<const Node> order) {
    validate_permutation(order, inst.size());
    return cycle_length_unchecked(inst, order);
}

Tour make_tour(const Instance& inst, std::vector<Node> order) {
    const double len = tour_length(inst, order);
    return Tour{std::move(order), len};
}

std::vector<std::pair<Node, Node>> tour_edges(std::span<const Node> order) {
    std::vector<std::pair<Node, Node>> edges;
    if (order.size() < 2) {
        return edges;
    }
    if (order.size() == 2) {
        edges.emplace_back(order[0], order[1]);
        return edges;
    }
    edges.reserve(order.size());
    for (std::size_t t = 0; t + 1 < order.size(); ++t) {
        edges.emplace_back(order[t], order[t + 1]);
    }
    edges.emplace_back(order.back(), order.front());
    return edges;
}

}  // namespace aco
