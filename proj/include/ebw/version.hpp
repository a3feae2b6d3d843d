#pragma once

namespace ebw {
inline constexpr const char* kVersion = "0.1.0";
}
