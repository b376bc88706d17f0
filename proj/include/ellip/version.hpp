#pragma once

namespace ellip {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ellip
