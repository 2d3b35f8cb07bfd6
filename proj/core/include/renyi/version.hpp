#pragma once

namespace renyi {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace renyi
