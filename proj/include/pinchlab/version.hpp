#pragma once

namespace pinchlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "pinchlab";

} // namespace pinchlab
