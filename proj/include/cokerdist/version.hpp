#pragma once

namespace coker {
inline constexpr const char* kVersion = "0.1.0";
}
