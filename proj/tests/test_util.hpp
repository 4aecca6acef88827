#pragma once

#include <algorithm>
#include <cmath>

// Relative error against a nonzero expected value; absolute when the
// expectation is zero.
inline double rel_err(double actual, double expected) {
    const double scale = std::max(std::abs(expected), 1e-300);
    return std::abs(actual - expected) / scale;
}
