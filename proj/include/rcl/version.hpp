#pragma once

namespace rcl {
inline constexpr const char* kToolName = "rcl";
inline constexpr const char* kToolVersion = "0.1.0";
}  // namespace rcl
