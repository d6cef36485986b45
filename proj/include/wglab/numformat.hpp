// Shortest round-trip decimal formatting for reproducible text output.
#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace wglab {

inline std::string format_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

inline std::string format_u64(std::uint64_t v) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace wglab
