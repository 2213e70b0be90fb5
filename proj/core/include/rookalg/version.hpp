#pragma once

namespace rookalg {
inline constexpr const char* kVersion = "0.1.0";
}
