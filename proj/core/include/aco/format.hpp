#pragma once

#include <string>

namespace aco {

/// Shortest decimal text that parses back to exactly the same double.
/// Integral values print without a fractional part ("7542", not "7542.0").
std::string format_double(double value);

}  // namespace aco
