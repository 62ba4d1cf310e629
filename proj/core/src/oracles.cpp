#include "aco/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace aco {

Tour nearest_neighbor_tour(const Instance& inst, Node start) {
    const std::size_t n = inst.size();
    if (start >= n) {
        throw std::out_of_range("start node out of range");
    }
    std::vector<bool> visited(n, false);
    std::vector<Node> order;
    order.reserve(n);
    Node current = start;
    visited[current] = true;
    order.push_back(current);
    while (order.size() < n) {
        Node best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (Node j = 0; j < n; ++j) {
            if (!visited[j] && inst.weight(current, j) < best_d) {
                best_d = inst.weight(current, j);
                best = j;
            }
        }
        visited[best] = true;
        order.push_back(best);
        current = best;
    }
    const double len = cycle_length_unchecked(inst, order);
    return Tour{std::move(order), len};
}

Tour brute_force_optimum(const Instance& inst) {
    const std::size_t n = inst.size();
    if (n > kBruteForceMaxNodes) {
        throw std::invalid_argument("brute force limited to " + std::to_string(kBruteForceMaxNodes) +
                                    " nodes, instance has " + std::to_string(n));
    }
    std::vector<Node> order(n);
    std::iota(order.begin(), order.end(), Node{0});

    Tour best{order, std::numeric_limits<double>::infinity()};
    do {
        // Each cycle appears twice (once per direction); keep the orientation
        // whose second node is smaller, which is also the lexicographically
        // smaller of the pair.
        if (n >= 3 && order[1] > order.back()) {
            continue;
        }
        const double len = cycle_length_unchecked(inst, order);
        if (len < best.length) {
            best.order = order;
            best.length = len;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return best;
}

Tour held_karp_exact(const Instance& inst) {
    const std::size_t n = inst.size();
    if (n > kHeldKarpMaxNodes) {
        throw std::invalid_argument("Held-Karp limited to " + std::to_string(kHeldKarpMaxNodes) +
                                    " nodes, instance has " + std::to_string(n));
    }
    if (n == 2) {
        return Tour{{0, 1}, 2.0 * inst.weight(0, 1)};
    }

    // Node 0 is the fixed origin; subsets range over nodes 1..n-1 where bit
    // (v-1) marks node v. cost[S][v-1] is the cheapest path 0 -> ... -> v
    // visiting exactly the nodes of S, with v in S.
    const std::size_t m = n - 1;
    const std::size_t subsets = std::size_t{1} << m;
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost(subsets * m, inf);
    std::vector<std::uint8_t> parent(subsets * m, 0);

    for (std::size_t v = 0; v < m; ++v) {
        cost[(std::size_t{1} << v) * m + v] = inst.weight(0, v + 1);
    }
    for (std::size_t set = 1; set < subsets; ++set) {
        for (std::size_t v = 0; v < m; ++v) {
            if (!(set & (std::size_t{1} << v))) {
                continue;
            }
            const double base = cost[set * m + v];
            if (base == inf) {
                continue;
            }
            for (std::size_t w = 0; w < m; ++w) {
                if (set & (std::size_t{1} << w)) {
                    continue;
                }
                const std::size_t next = set | (std::size_t{1} << w);
                const double cand = base + inst.weight(v + 1, w + 1);
                if (cand < cost[next * m + w]) {
                    cost[next * m + w] = cand;
                    parent[next * m + w] = static_cast<std::uint8_t>(v);
                }
            }
        }
    }

    const std::size_t full = subsets - 1;
    double best = inf;
    std::size_t last = 0;
    for (std::size_t v = 0; v < m; ++v) {
        const double cand = cost[full * m + v] + inst.weight(v + 1, 0);
        if (cand < best) {
            best = cand;
            last = v;
        }
    }

    std::vector<Node> reversed;
    reversed.reserve(n);
    std::size_t set = full;
    std::size_t v = last;
    while (true) {
        reversed.push_back(v + 1);
        const std::size_t prev_set = set & ~(std::size_t{1} << v);
        if (prev_set == 0) {
            break;
        }
        v = parent[set * m + v];
        set = prev_set;
    }
    std::vector<Node> order{0};
    order.insert(order.end(), reversed.rbegin(), reversed.rend());
    const double len = cycle_length_unchecked(inst, order);
    return Tour{std::move(order), len};
}

}  // namespace aco
