#include "aco/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "aco/rng.hpp"

namespace aco {

double euc2d_weight(Coord a, Coord b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::floor(std::sqrt(dx * dx + dy * dy) + 0.5);
}

Instance Instance::from_coords(std::string name, std::vector<Coord> coords) {
    Instance inst;
    inst.name_ = std::move(name);
    inst.n_ = coords.size();
    inst.kind_ = WeightKind::Euc2D;
    if (inst.n_ < 2) {
        throw std::invalid_argument("instance needs at least 2 nodes");
    }
    for (const auto& c : coords) {
        if (!std::isfinite(c.x) || !std::isfinite(c.y)) {
            throw std::invalid_argument("non-finite coordinate");
        }
    }
    inst.dist_.assign(inst.n_ * inst.n_, 0.0);
    for (Node i = 0; i < inst.n_; ++i) {
        for (Node j = i + 1; j < inst.n_; ++j) {
            const double d = euc2d_weight(coords[i], coords[j]);
            inst.dist_[i * inst.n_ + j] = d;
            inst.dist_[j * inst.n_ + i] = d;
        }
    }
    inst.coords_ = std::move(coords);
    inst.integer_weights_ = true;
    inst.validate();
    return inst;
}

Instance Instance::from_matrix(std::string name, std::vector<double> row_major, std::size_t n) {
    Instance inst;
    inst.name_ = std::move(name);
    inst.n_ = n;
    inst.kind_ = WeightKind::ExplicitFullMatrix;
    if (n < 2) {
        throw std::invalid_argument("instance needs at least 2 nodes");
    }
    if (row_major.size() != n * n) {
        throw std::invalid_argument("distance matrix has " + std::to_string(row_major.size()) +
                                    " entries, expected " + std::to_string(n * n));
    }
    inst.dist_ = std::move(row_major);
    inst.integer_weights_ = true;
    for (double d : inst.dist_) {
        if (d != std::floor(d)) {
            inst.integer_weights_ = false;
            break;
        }
    }
    inst.validate();
    return inst;
}

void Instance::validate() const {
    for (Node i = 0; i < n_; ++i) {
        if (weight(i, i) != 0.0) {
            throw std::invalid_argument("nonzero diagonal at node " + std::to_string(i));
        }
        for (Node j = 0; j < n_; ++j) {
            const double d = weight(i, j);
            if (!std::isfinite(d) || d < 0.0) {
                throw std::invalid_argument("invalid weight between " + std::to_string(i) + " and " +
                                            std::to_string(j));
            }
            if (d != weight(j, i)) {
                throw std::invalid_argument("asymmetric weight between " + std::to_string(i) +
                                            " and " + std::to_string(j));
            }
        }
    }
}

double distance(const Instance& inst, Node i, Node j) {
    if (i >= inst.size() || j >= inst.size()) {
        throw std::out_of_range("node index out of range");
    }
    return inst.weight(i, j);
}

Instance generate_uniform_instance(std::size_t n, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("instance needs at least 2 nodes");
    }
    Rng rng(seed);
    std::vector<Coord> coords(n);
    for (auto& c : coords) {
        c.x = rng.uniform() * 1000.0;
        c.y = rng.uniform() * 1000.0;
    }
    return Instance::from_coords("rand" + std::to_string(n) + "_s" + std::to_string(seed),
                                 std::move(coords));
}

}  // namespace aco
