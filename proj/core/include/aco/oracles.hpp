#pragma once

#include <cstddef>

#include "aco/instance.hpp"
#include "aco/tour.hpp"

namespace aco {

inline constexpr std::size_t kBruteForceMaxNodes = 11;
inline constexpr std::size_t kHeldKarpMaxNodes = 18;

/// Greedy tour from start, always moving to the nearest unvisited node.
/// Ties go to the lowest node index.
Tour nearest_neighbor_tour(const Instance& inst, Node start);

/// Optimal tour by enumerating every distinct cycle with node 0 first.
/// Among optima the lexicographically smallest order is returned.
/// Throws std::invalid_argument when n > kBruteForceMaxNodes.
Tour brute_force_optimum(const Instance& inst);

/// Optimal tour via the Held-Karp subset dynamic program, O(2^n n^2).
/// Throws std::invalid_argument when n > kHeldKarpMaxNodes.
Tour held_karp_exact(const Instance& inst);

}  // namespace aco
