#pragma once

namespace cf {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace cf
