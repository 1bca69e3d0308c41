#pragma once

#include <string_view>

namespace cargoflow {

inline constexpr std::string_view kToolName = "cargoflow";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace cargoflow
