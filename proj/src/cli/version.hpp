#pragma once

namespace repsim::cli {

inline constexpr const char* kToolName = "repsim";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace repsim::cli
