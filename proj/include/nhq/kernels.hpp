// kernels.hpp — batched bath-integrand evaluation with runtime-selected SIMD backend
//
// Every continuum bath integral is  \int dw J(w) K(w, t)  with
// J(w) = j0 w^(1+mu) e^(-w/wc). The quadrature driver hands whole node
// batches to `evaluate`, which fills J(w_i) K(w_i, t). The scalar backend is
// the reference; the AVX2/FMA backend is used when the CPU supports it and
// must agree with the reference to ~1e-13 relative.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace nhq::kernels {

enum class Integrand : std::uint8_t {
    Decoherence,          // (1 - cos wt)/w^2 * coth(beta w / 2)
    DecoherenceBetaRate,  // (1 - cos wt)/w^2 * (-w/2) csch^2(beta w / 2)
    HermitianPhase,       // (wt - sin wt)/w^2
    HermitianPhaseRate,   // (1 - cos wt)/w
    BathPhase,            // (1 - cos wt)/w^2
    BathPhaseRate,        // sin(wt)/w
    Spectral,             // 1
};

struct IntegrandParams {
    double j0{1.0};
    double mu{-0.5};
    double wc{1.0};
    double beta{1.0};
    double t{0.0};
};

enum class Backend : std::uint8_t { Scalar, Avx2 };

std::string_view name(Backend b) noexcept;

/// True when the backend was compiled in and the running CPU supports it.
bool available(Backend b) noexcept;

/// Backend used by `evaluate`. Chosen once at startup: AVX2 when available,
/// unless the environment variable NHQ_KERNEL_BACKEND=scalar is set.
Backend active() noexcept;

/// Overrides the active backend (tests, benchmarks). Throws DomainError if unavailable.
void set_active(Backend b);

/// out[i] = J(w[i]) * K(w[i], t). Requires w[i] > 0 and out.size() == w.size().
void evaluate(Integrand kind, const IntegrandParams& p, std::span<const double> w, std::span<double> out);

void evaluate(Backend backend, Integrand kind, const IntegrandParams& p, std::span<const double> w,
              std::span<double> out);

}  // namespace nhq::kernels
