#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace sqrtdx {

/// Shortest decimal form that round-trips to the same double (CSV output).
inline std::string format_shortest(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

/// Fixed 10 significant digits (human-readable tables).
inline std::string format_sig10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
}

} // namespace sqrtdx
