#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "aco/instance.hpp"

namespace aco {

enum class Algorithm { AS, EAS, MEAS };

std::string_view to_string(Algorithm algo);
/// Accepts "as", "eas", "meas" in any case; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view text);

/// Which constructed tour a global update refers to.
enum class TourScope { Global, Iteration };

/// Free parameters of the MEAS global update and stagnation escape.
struct MeasParams {
    /// Window value that disables the escape entirely.
    static constexpr std::size_t kNeverEscape = std::numeric_limits<std::size_t>::max();

    /// Gain multiplier on Q/L_best per best-tour edge. Unset means "use the
    /// colony's elite weight".
    std::optional<double> reinforce_weight;
    /// Fraction of pheromone removed from worst-tour edges, in [0, 1).
    double penalty_weight = 0.2;
    std::size_t stagnation_window = 30;
    /// Relative improvement the global best must exceed to count as progress.
    double improvement_tolerance = 1e-6;
    /// Blend toward the initial trail level on escape, in (0, 1].
    double escape_blend = 0.5;

    TourScope best_scope = TourScope::Global;
    TourScope worst_scope = TourScope::Iteration;

    /// Throws std::invalid_argument on any out-of-range field.
    void validate() const;
};

struct ColonyConfig {
    double alpha = 1.0;
    double beta = 3.0;
    double rho = 0.1;
    std::size_t ants = 10;
    double q_deposit = 1.0;
    double elite_weight = 3.0;
    std::size_t max_iterations = 1000;
    std::uint64_t seed = 1;
    /// Random start nodes instead of round-robin over {0, ..., n-1}.
    bool random_starts = false;
    MeasParams meas;

    double reinforce_weight() const { return meas.reinforce_weight.value_or(elite_weight); }

    /// Throws std::invalid_argument on any out-of-range field.
    void validate() const;
};

/// Conventional settings scaled to the instance: m = min(n, 50) ants and
/// elite weight ceil(n / 4).
ColonyConfig default_config(const Instance& inst);

}  // namespace aco
