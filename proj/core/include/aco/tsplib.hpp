#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "aco/instance.hpp"

namespace aco {

/// Malformed or unsupported TSPLIB input. line() is 1-based; 0 means the
/// problem is not tied to a single line (e.g. a missing section).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses the symmetric TSPLIB subset: TYPE TSP with EDGE_WEIGHT_TYPE EUC_2D,
/// or EXPLICIT with EDGE_WEIGHT_FORMAT FULL_MATRIX.
Instance parse_tsplib(std::string_view text);

/// Reads and parses a file. I/O failures throw std::runtime_error.
Instance load_tsplib(const std::filesystem::path& path);

/// Serializes an instance. Coordinates (EUC_2D) or the full matrix (EXPLICIT)
/// are written with round-trip precision, so parse_tsplib reproduces the
/// instance exactly.
std::string write_tsplib(const Instance& inst, std::string_view comment = {});

}  // namespace aco
