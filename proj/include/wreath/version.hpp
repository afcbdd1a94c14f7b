#pragma once

namespace wreath {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wreath
