#pragma once

#include <string_view>

namespace tiltgait {

inline constexpr std::string_view kToolName = "tiltgait";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace tiltgait
