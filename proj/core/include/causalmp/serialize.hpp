#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace causalmp {

// Numbers in serialized output are round-tripped through a 12 significant
// digit decimal form so repeated runs produce byte-identical files.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

}  // namespace causalmp
