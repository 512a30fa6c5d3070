#pragma once

namespace twistlat {
inline constexpr const char* kVersion = "0.1.0";
}
