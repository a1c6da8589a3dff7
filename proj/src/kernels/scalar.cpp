// Scalar reference integrands. Written for clarity: std::pow/std::expm1/std::sin
// straight from <cmath>; the SIMD backend is validated against this file.

#include <cmath>
#include <cstddef>

#include "kernels/backends.hpp"
#include "kernels/series.hpp"

namespace nhq::kernels::scalar {

namespace {

double spectral(const IntegrandParams& p, double w) {
    return p.j0 * std::pow(w, 1.0 + p.mu) * std::exp(-w / p.wc);
}

double one_minus_cos(double x) {
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

double x_minus_sin(double x) {
    if (std::abs(x) < series::kXMinusSinCut) return series::x_minus_sin(x);
    return x - std::sin(x);
}

double integrand(Integrand kind, const IntegrandParams& p, double w) {
    const double jw = spectral(p, w);
    const double x = w * p.t;
    switch (kind) {
        case Integrand::Decoherence: {
            const double em = std::expm1(-p.beta * w);
            const double coth = (2.0 + em) / -em;
            return jw * one_minus_cos(x) / (w * w) * coth;
        }
        case Integrand::DecoherenceBetaRate: {
            const double em = std::expm1(-p.beta * w);
            const double csch2 = 4.0 * std::exp(-p.beta * w) / (em * em);
            return jw * one_minus_cos(x) / (w * w) * (-0.5 * w) * csch2;
        }
        case Integrand::HermitianPhase: return jw * x_minus_sin(x) / (w * w);
        case Integrand::HermitianPhaseRate: return jw * one_minus_cos(x) / w;
        case Integrand::BathPhase: return jw * one_minus_cos(x) / (w * w);
        case Integrand::BathPhaseRate: return jw * std::sin(x) / w;
        case Integrand::Spectral: return jw;
    }
    return 0.0;
}

}  // namespace

void evaluate(Integrand kind, const IntegrandParams& p, std::span<const double> w, std::span<double> out) {
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = integrand(kind, p, w[i]);
}

}  // namespace nhq::kernels::scalar
