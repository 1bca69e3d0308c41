#pragma once

#include <string>

namespace cargoflow {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

/// Fixed-point presentation used by the human-readable tables.
std::string format_fixed(double value, int decimals = 4);

}  // namespace cargoflow
