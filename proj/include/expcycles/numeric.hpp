#pragma once

#include <cmath>

namespace expcycles {

/// Comparison slack for thresholds computed in floating point, e.g. so that
/// 0.1 * 60 rounds up to 6 rather than 7.
inline constexpr double kTolerance = 1e-9;

inline int ceil_tol(double x) { return static_cast<int>(std::ceil(x - kTolerance)); }
inline int floor_tol(double x) { return static_cast<int>(std::floor(x + kTolerance)); }
inline bool less_tol(double a, double b) { return a < b - kTolerance; }

}  // namespace expcycles
