#ifndef SPECRIG_NUMFMT_HPP
#define SPECRIG_NUMFMT_HPP

#include <cstdio>
#include <cstdlib>
#include <string>

namespace specrig {

// All numeric output is printed with 12 significant digits; rounding the
// stored doubles to that precision keeps JSON emission consistent with it.
inline std::string format_sig(double x, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

inline double round_sig(double x, int digits = 12) {
    return std::strtod(format_sig(x, digits).c_str(), nullptr);
}

} // namespace specrig

#endif
