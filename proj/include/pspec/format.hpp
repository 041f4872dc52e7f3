#ifndef PSPEC_FORMAT_HPP
#define PSPEC_FORMAT_HPP

#include <cstdio>
#include <string>
#include <string_view>

namespace pspec {

/// %g with a fixed number of significant digits; reports serialize floats
/// with 17 digits so repeated runs are byte-identical.
inline std::string format_double(double v, int significant = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

} // namespace pspec

#endif // PSPEC_FORMAT_HPP
