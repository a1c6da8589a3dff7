// quadrature.hpp — globally adaptive Gauss–Kronrod (21/10) with batched integrand calls

#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace nhq::quad {

/// Fills out[i] = f(x[i]). Called with whole panel batches (21 nodes per panel).
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<double> out)>;

struct Result {
    double value{};
    double abs_error{};
    std::size_t evaluations{};
    std::size_t bisections{};
};

struct AdaptiveOptions {
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    /// Bisections allowed on top of the initial partition.
    std::size_t max_bisections{2000};
};

/// Integrates over [breakpoints.front(), breakpoints.back()], starting from the
/// panels between consecutive breakpoints (which must be strictly increasing)
/// and always bisecting the panel with the largest |K21 - G10|. Stops when the
/// summed error estimate is below max(abs_tol, rel_tol * |I|).
/// Throws QuadratureFailure when max_bisections is exhausted.
Result integrate(const BatchIntegrand& f, std::span<const double> breakpoints, const AdaptiveOptions& opts = {});

}  // namespace nhq::quad
