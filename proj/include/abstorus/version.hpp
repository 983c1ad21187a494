#pragma once

namespace abstorus {
inline constexpr const char* kVersion = "0.1.0";
}
