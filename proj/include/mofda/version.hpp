#pragma once

namespace mofda {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mofda
