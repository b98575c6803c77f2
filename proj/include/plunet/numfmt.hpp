#pragma once

#include <cstdio>
#include <string>

namespace plunet {

// 17 significant digits: enough for a decimal -> double parse to recover the
// exact value, so text artifacts are reproducible and round-trippable.
inline std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace plunet
