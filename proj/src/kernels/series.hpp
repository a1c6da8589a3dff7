// Power-series pieces shared by the scalar and SIMD backends.

#pragma once

namespace nhq::kernels::series {

/// Below this |x|, x - sin x is summed as a series (direct subtraction cancels).
inline constexpr double kXMinusSinCut = 0.5;

// x - sin x = x^3 (1/3! - x^2/5! + x^4/7! - ...), truncated after x^15/15!.
inline constexpr double kXMinusSin[] = {
    1.0 / 6.0,
    -1.0 / 120.0,
    1.0 / 5040.0,
    -1.0 / 362880.0,
    1.0 / 39916800.0,
    -1.0 / 6227020800.0,
    1.0 / 1307674368000.0,
};

inline double x_minus_sin(double x) {
    const double z = x * x;
    double acc = kXMinusSin[6];
    for (int k = 5; k >= 0; --k) acc = acc * z + kXMinusSin[k];
    return x * z * acc;
}

}  // namespace nhq::kernels::series
