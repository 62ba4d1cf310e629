#pragma once

#include <string>
#include <vector>

#include "aco/instance.hpp"

namespace aco::testing {

/// 3-4-5 right triangle: dist = [[0,3,4],[3,0,5],[4,5,0]].
inline Instance triangle() { return Instance::from_coords("triangle", {{0, 0}, {3, 0}, {0, 4}}); }

inline Instance two_nodes(double d = 2.0) { return Instance::from_matrix("pair", {0, d, d, 0}, 2); }

inline Instance unit_square() { return Instance::from_coords("square", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

/// Two vertical columns of five nodes 400 apart, plus one node protruding
/// from each column toward the other. The protruding nodes sit 100 apart, a
/// short bridge that the optimal tour does not use.
inline Instance deceptive_bridge() {
    std::vector<Coord> c;
    for (int k = 0; k < 5; ++k) {
        c.push_back({0.0, -400.0 + 200.0 * k});
    }
    c.push_back({150.0, 100.0});
    for (int k = 0; k < 5; ++k) {
        c.push_back({400.0, -400.0 + 200.0 * k});
    }
    c.push_back({250.0, 100.0});
    return Instance::from_coords("deceptive12", std::move(c));
}

inline std::string source_dir() { return ACO_SOURCE_DIR; }
inline std::string berlin52_path() { return source_dir() + "/data/berlin52.tsp"; }

}  // namespace aco::testing
