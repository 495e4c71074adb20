#pragma once

namespace qlens {

// Reduced Planck constant [J s], CODATA 2018.
inline constexpr double kHbar = 1.054571817e-34;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace qlens
