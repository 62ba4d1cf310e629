#pragma once

#include <span>
#include <utility>
#include <vector>

#include "aco/instance.hpp"

namespace aco {

/// A closed tour: a permutation of all nodes plus its cached cycle length.
struct Tour {
    std::vector<Node> order;
    double length = 0.0;
};

/// Throws std::invalid_argument unless order is a permutation of {0, ..., n-1}.
void validate_permutation(std::span<const Node> order, std::size_t n);

/// Cycle length including the closing edge. The order is validated first.
double tour_length(const Instance& inst, std::span<const Node> order);

/// Validates order and returns it together with its length.
Tour make_tour(const Instance& inst, std::vector<Node> order);

/// Length without validation; for orders produced internally.
double cycle_length_unchecked(const Instance& inst, std::span<const Node> order);

/// Distinct undirected edges of the cycle. A 2-node tour traverses its single
/// edge twice but contributes it once here.
std::vector<std::pair<Node, Node>> tour_edges(std::span<const Node> order);

}  // namespace aco
