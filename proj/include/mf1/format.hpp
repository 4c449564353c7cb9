#pragma once

#include <charconv>
#include <string>

namespace mf1 {

/// Shortest decimal representation that parses back to the same double
/// (0.504950495049505 stays 0.504950495049505, not 0.50495049504950497).
inline std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

/// Fixed 17 significant digits, enough to reconstruct any double. Used for
/// CSV output where a uniform width beats the shortest form. Locale-free.
inline std::string format_double_17(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, value,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

}  // namespace mf1
