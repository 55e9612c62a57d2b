#pragma once

namespace yangian {
inline constexpr const char* kVersion = "0.1.0";
}
