// Internal entry points of the kernel backends. Tests include this header to
// check the vector math primitives against the scalar reference.

#pragma once

#include <span>

#include "nhq/kernels.hpp"

namespace nhq::kernels {

namespace scalar {
void evaluate(Integrand kind, const IntegrandParams& p, std::span<const double> w, std::span<double> out);
}

#if defined(NHQ_HAVE_AVX2)
namespace avx2 {
void evaluate(Integrand kind, const IntegrandParams& p, std::span<const double> w, std::span<double> out);

// Elementwise vector math, exposed for equivalence tests.
void exp(std::span<const double> x, std::span<double> out);
void log(std::span<const double> x, std::span<double> out);
void expm1(std::span<const double> x, std::span<double> out);
void sin(std::span<const double> x, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace nhq::kernels
