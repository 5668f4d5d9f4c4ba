// SPDX-License-Identifier: Apache-2.0
#include "chronop/format.hpp"

#include <cstdio>

namespace chronop {

std::string fmt17(double v) {
    if (v == 0.0) v = 0.0;  // collapse negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace chronop
