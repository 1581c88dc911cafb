#pragma once

#include <cstdio>
#include <string>

namespace knapsack {

// Fixed 10-significant-digit rendering so that identical runs produce
// byte-identical CSV output.
inline std::string csv_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

}  // namespace knapsack
