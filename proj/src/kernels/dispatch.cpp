#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "kernels/backends.hpp"
#include "nhq/errors.hpp"

namespace nhq::kernels {

namespace {

bool cpu_supports_avx2() noexcept {
#if defined(NHQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() noexcept {
    if (const char* env = std::getenv("NHQ_KERNEL_BACKEND"); env && std::string_view(env) == "scalar") {
        return Backend::Scalar;
    }
    return available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& active_slot() noexcept {
    static std::atomic<Backend> slot{initial_backend()};
    return slot;
}

}  // namespace

std::string_view name(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

bool available(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2: {
            static const bool ok = cpu_supports_avx2();
            return ok;
        }
    }
    return false;
}

Backend active() noexcept { return active_slot().load(std::memory_order_relaxed); }

void set_active(Backend b) {
    if (!available(b)) throw DomainError("kernel backend '" + std::string(name(b)) + "' is not available");
    active_slot().store(b, std::memory_order_relaxed);
}

void evaluate(Backend backend, Integrand kind, const IntegrandParams& p, std::span<const double> w,
              std::span<double> out) {
    if (out.size() != w.size()) throw DomainError("kernels::evaluate: output size mismatch");
    switch (backend) {
        case Backend::Scalar: scalar::evaluate(kind, p, w, out); return;
        case Backend::Avx2:
#if defined(NHQ_HAVE_AVX2)
            avx2::evaluate(kind, p, w, out);
            return;
#else
            break;
#endif
    }
    throw DomainError("kernel backend '" + std::string(name(backend)) + "' is not compiled in");
}

void evaluate(Integrand kind, const IntegrandParams& p, std::span<const double> w, std::span<double> out) {
    evaluate(active(), kind, p, w, out);
}

}  // namespace nhq::kernels
