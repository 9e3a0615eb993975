#pragma once

// Base-2 log-space helpers shared by the bound and key-length solvers.
// Quantities such as 2^n * P_s overflow a double for n > 1023; everything in
// those paths is carried as log2 values.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace qlimits::log2math {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log2(2^a + 2^b).
inline double add(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log2(1.0 + std::exp2(lo - hi));
}

/// log2(2^e - 1) for e > 0; -inf at e == 0.
inline double pow2_minus_one(double e) {
    if (e <= 0.0) return kNegInf;
    if (e > 60.0) return e + std::log2(-std::expm1(-e * std::numbers::ln2));
    return std::log2(std::expm1(e * std::numbers::ln2));
}

/// log2(2^e + 1).
inline double pow2_plus_one(double e) {
    if (e > 0.0) return e + std::log2(1.0 + std::exp2(-e));
    return std::log2(1.0 + std::exp2(e));
}

/// Floor/ceil that treat values within `tol` (relative) of an integer as
/// that integer, so exactly constructed budgets land on the intended bit.
inline double snap(double x, double tol = 1e-12) {
    const double r = std::round(x);
    return std::abs(x - r) <= tol * std::max(1.0, std::abs(x)) ? r : x;
}
inline long long snap_floor(double x) { return static_cast<long long>(std::floor(snap(x))); }
inline long long snap_ceil(double x) { return static_cast<long long>(std::ceil(snap(x))); }

}  // namespace qlimits::log2math
