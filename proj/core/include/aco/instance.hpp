#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aco {

using Node = std::size_t;

enum class WeightKind { Euc2D, ExplicitFullMatrix };

struct Coord {
    double x = 0.0;
    double y = 0.0;
};

/// TSPLIB EUC_2D weight: Euclidean distance rounded to the nearest integer.
double euc2d_weight(Coord a, Coord b);

/// Immutable symmetric TSP instance with a dense distance matrix.
///
/// The matrix is always materialized, so lookups are O(1) regardless of how
/// the instance was described. Construction validates symmetry, a zero
/// diagonal and nonnegative finite weights; violations throw
/// std::invalid_argument.
class Instance {
public:
    static Instance from_coords(std::string name, std::vector<Coord> coords);
    static Instance from_matrix(std::string name, std::vector<double> row_major, std::size_t n);

    const std::string& name() const { return name_; }
    std::size_t size() const { return n_; }
    WeightKind weight_kind() const { return kind_; }
    const std::optional<std::vector<Coord>>& coords() const { return coords_; }

    /// Unchecked lookup for hot loops.
    double weight(Node i, Node j) const { return dist_[i * n_ + j]; }

    std::span<const double> row(Node i) const { return {dist_.data() + i * n_, n_}; }
    std::span<const double> matrix() const { return dist_; }

    bool has_integer_weights() const { return integer_weights_; }

private:
    Instance() = default;
    void validate() const;

    std::string name_;
    std::size_t n_ = 0;
    WeightKind kind_ = WeightKind::Euc2D;
    std::optional<std::vector<Coord>> coords_;
    std::vector<double> dist_;
    bool integer_weights_ = true;
};

/// Checked lookup; throws std::out_of_range for a node outside [0, n).
double distance(const Instance& inst, Node i, Node j);

/// n points drawn uniformly from [0, 1000]^2, named "rand<n>_s<seed>".
Instance generate_uniform_instance(std::size_t n, std::uint64_t seed);

}  // namespace aco
