#pragma once

#include <cstdint>

namespace ebw {

// exact integer square root: largest s with s*s <= x
inline std::uint64_t isqrt64(std::uint64_t x) {
    if (x == 0) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(__builtin_sqrt(static_cast<double>(x)));
    while (s > 0 && s * s > x) --s;
    while ((s + 1) * (s + 1) <= x) ++s;
    return s;
}

inline bool is_square64(std::uint64_t x, std::uint64_t* root = nullptr) {
    std::uint64_t s = isqrt64(x);
    if (root) *root = s;
    return s * s == x;
}

} // namespace ebw
