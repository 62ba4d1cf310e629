#include "aco/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aco {

std::string_view to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::AS:
            return "AS";
        case Algorithm::EAS:
            return "EAS";
        case Algorithm::MEAS:
            return "MEAS";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "as") {
        return Algorithm::AS;
    }
    if (lower == "eas") {
        return Algorithm::EAS;
    }
    if (lower == "meas") {
        return Algorithm::MEAS;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(text) + "' (expected as, eas or meas)");
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

void MeasParams::validate() const {
    if (reinforce_weight) {
        require(std::isfinite(*reinforce_weight) && *reinforce_weight > 0.0, "reinforce weight must be > 0");
    }
    require(penalty_weight >= 0.0 && penalty_weight < 1.0, "penalty weight must lie in [0, 1)");
    require(stagnation_window >= 1, "stagnation window must be >= 1");
    require(std::isfinite(improvement_tolerance) && improvement_tolerance >= 0.0,
            "improvement tolerance must be >= 0");
    require(escape_blend > 0.0 && escape_blend <= 1.0, "escape blend must lie in (0, 1]");
}

void ColonyConfig::validate() const {
    require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be >= 0");
    require(std::isfinite(beta) && beta >= 0.0, "beta must be >= 0");
    require(rho >= 0.0 && rho <= 1.0, "rho must lie in [0, 1]");
    require(ants >= 1, "ant count must be >= 1");
    require(std::isfinite(q_deposit) && q_deposit > 0.0, "deposit constant Q must be > 0");
    require(std::isfinite(elite_weight) && elite_weight >= 0.0, "elite weight must be >= 0");
    require(max_iterations >= 1, "iteration budget must be >= 1");
    meas.validate();
}

ColonyConfig default_config(const Instance& inst) {
    ColonyConfig cfg;
    const std::size_t n = inst.size();
    cfg.ants = std::min<std::size_t>(n, 50);
    cfg.elite_weight = static_cast<double>((n + 3) / 4);
    return cfg;
}

}  // namespace aco
