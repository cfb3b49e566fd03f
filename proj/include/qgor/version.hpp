#pragma once

namespace qgor {

inline constexpr const char* kToolName = "qgor";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace qgor
