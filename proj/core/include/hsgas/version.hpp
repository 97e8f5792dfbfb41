#pragma once

namespace hsgas {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace hsgas
