#include "nhq/bath_integrals.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "nhq/errors.hpp"
#include "nhq/kernels.hpp"
#include "nhq/quadrature.hpp"

namespace nhq {

namespace {

kernels::Integrand integrand_of(BathIntegral kind) {
    switch (kind) {
        case BathIntegral::Gamma: return kernels::Integrand::Decoherence;
        case BathIntegral::GammaBetaRate: return kernels::Integrand::DecoherenceBetaRate;
        case BathIntegral::HermitianPhase: return kernels::Integrand::HermitianPhase;
        case BathIntegral::HermitianPhaseRate: return kernels::Integrand::HermitianPhaseRate;
        case BathIntegral::BathPhase: return kernels::Integrand::BathPhase;
        case BathIntegral::BathPhaseRate: return kernels::Integrand::BathPhaseRate;
    }
    return kernels::Integrand::Spectral;
}

// Power-series coefficients of w*K(w) in w^0..w^3, where K is the kernel
// multiplying J(w) (without the overall factor 4).
std::array<double, 4> kernel_series(BathIntegral kind, double beta, double t) {
    const double t2 = t * t;
    switch (kind) {
        case BathIntegral::Gamma: return {t2 / beta, 0.0, beta * t2 / 12.0 - t2 * t2 / (12.0 * beta), 0.0};
        case BathIntegral::GammaBetaRate:
            return {-t2 / (beta * beta), 0.0, t2 / 12.0 + t2 * t2 / (12.0 * beta * beta), 0.0};
        case BathIntegral::HermitianPhase: return {0.0, 0.0, t2 * t / 6.0, 0.0};
        case BathIntegral::HermitianPhaseRate: return {0.0, 0.0, t2 / 2.0, 0.0};
        case BathIntegral::BathPhase: return {0.0, t2 / 2.0, 0.0, -t2 * t2 / 24.0};
        case BathIntegral::BathPhaseRate: return {0.0, t, 0.0, -t2 * t / 6.0};
    }
    return {};
}

// int_0^ws j0 w^mu e^(-w/wc) P(w) dw with the exponential expanded to third order.
double series_patch(BathIntegral kind, const BathSpec& b, double t, double ws) {
    const auto p = kernel_series(kind, b.beta, t);
    const double iw = 1.0 / b.wc;
    const std::array<double, 4> e{1.0, -iw, 0.5 * iw * iw, -iw * iw * iw / 6.0};
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        double ck = 0.0;
        for (int j = 0; j <= k; ++j) ck += p[j] * e[k - j];
        const double power = b.mu + k + 1.0;
        sum += ck * std::pow(ws, power) / power;
    }
    return b.j0 * sum;
}

std::vector<double> breakpoints(double ws, double w_max, double t) {
    std::vector<double> pts{ws};
    for (double w = 10.0 * ws; w < 0.1 * w_max; w *= 10.0) pts.push_back(w);
    if (t * w_max > 50.0) {
        const double spacing = std::numbers::pi / t;
        for (double k = std::ceil(ws / spacing - 0.5); (k + 0.5) * spacing < w_max; k += 1.0) {
            const double w = (k + 0.5) * spacing;
            if (w > ws) pts.push_back(w);
        }
    }
    pts.push_back(w_max);
    std::sort(pts.begin(), pts.end());
    // Drop points closer than a relative 1e-9 to their predecessor.
    std::vector<double> out{pts.front()};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i] > out.back() * (1.0 + 1e-9)) out.push_back(pts[i]);
    }
    if (out.back() != w_max) out.back() = w_max;
    return out;
}

double adaptive_part(BathIntegral kind, const BathSpec& b, double t, double lo, double hi,
                     const QuadratureConfig& cfg) {
    const kernels::IntegrandParams params{b.j0, b.mu, b.wc, b.beta, t};
    const auto integrand = integrand_of(kind);
    const quad::BatchIntegrand f = [&](std::span<const double> w, std::span<double> out) {
        kernels::evaluate(integrand, params, w, out);
    };
    const auto pts = breakpoints(lo, hi, t);
    // abs_tol refers to the integral including its factor 4.
    quad::AdaptiveOptions opts;
    opts.rel_tol = cfg.rel_tol;
    opts.abs_tol = cfg.abs_tol / 4.0;
    opts.max_bisections = cfg.max_subdivisions;
    return quad::integrate(f, pts, opts).value;
}

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("bath integrals need finite t >= 0, got " + std::to_string(t));
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
    if (!(w_max_factor >= 20.0) || !std::isfinite(w_max_factor)) throw DomainError("w_max_factor must be >= 20");
    if (max_subdivisions == 0) throw DomainError("max_subdivisions must be positive");
    if (!(patch_scale > 0.0) || patch_scale > 1.0) throw DomainError("patch_scale must lie in (0, 1]");
}

double spectral_density(const BathSpec& b, double w) {
    if (!(w >= 0.0)) throw DomainError("spectral density needs w >= 0");
    if (w == 0.0) return 0.0;
    return b.j0 * std::pow(w, 1.0 + b.mu) * std::exp(-w / b.wc);
}

double spectral_moment(const BathSpec& b) { return b.j0 * std::tgamma(2.0 + b.mu) * std::pow(b.wc, 2.0 + b.mu); }

double series_patch_width(const BathSpec& b, double t, const QuadratureConfig& cfg) {
    const double ws = std::min({1e-3, 0.01 / std::max(t, 1.0), 0.01 / b.beta, 0.01 * b.wc});
    return cfg.patch_scale * ws;
}

double bath_integral(BathIntegral kind, const BathSpec& b, double t, const QuadratureConfig& cfg) {
    require_time(t);
    if (t == 0.0) return 0.0;
    b.validate();
    cfg.validate();
    const double ws = series_patch_width(b, t, cfg);
    const double w_max = cfg.w_max_factor * b.wc;
    const double patch = series_patch(kind, b, t, ws);
    const double value = 4.0 * (patch + adaptive_part(kind, b, t, ws, w_max, cfg));
#ifndef NDEBUG
    if (cfg.w_max_factor >= 60.0) {
        const double tail = 4.0 * adaptive_part(kind, b, t, w_max, 1.5 * w_max, cfg);
        assert(std::abs(tail) <= 1e-9 * std::max(std::abs(value), 1.0));
    }
#endif
    return value;
}

double gamma(const BathSpec& b, double t, const QuadratureConfig& cfg) {
    return bath_integral(BathIntegral::Gamma, b, t, cfg);
}

double dgamma_dbeta(const BathSpec& b, double t, const QuadratureConfig& cfg) {
    return bath_integral(BathIntegral::GammaBetaRate, b, t, cfg);
}

double omega_phase_hermitian(const BathSpec& b, double theta, double t, const QuadratureConfig& cfg) {
    return theta * bath_integral(BathIntegral::HermitianPhase, b, t, cfg);
}

double omega1(const BathSpec& b, double theta, double t, const QuadratureConfig& cfg) {
    return theta * bath_integral(BathIntegral::BathPhase, b, t, cfg);
}

double omega2(const BathSpec& b, double theta, double t) {
    require_time(t);
    b.validate();
    return 2.0 * theta * t * t * spectral_moment(b);
}

double omega_phase_hermitian_rate(const BathSpec& b, double theta, double t, const QuadratureConfig& cfg) {
    return theta * bath_integral(BathIntegral::HermitianPhaseRate, b, t, cfg);
}

double omega1_rate(const BathSpec& b, double theta, double t, const QuadratureConfig& cfg) {
    return theta * bath_integral(BathIntegral::BathPhaseRate, b, t, cfg);
}

double omega2_rate(const BathSpec& b, double theta, double t) {
    require_time(t);
    b.validate();
    return 4.0 * theta * t * spectral_moment(b);
}

BathIntegralCache::BathIntegralCache(BathSpec bath, QuadratureConfig config)
    : bath_(bath), config_(config), moment_(0.0) {
    bath_.validate();
    config_.validate();
    moment_ = spectral_moment(bath_);
}

void BathIntegralCache::register_grid(std::span<const double> ts) {
    std::lock_guard lock(mutex_);
    grid_.insert(grid_.end(), ts.begin(), ts.end());
    std::sort(grid_.begin(), grid_.end());
    grid_.erase(std::unique(grid_.begin(), grid_.end()), grid_.end());
}

double BathIntegralCache::get(BathIntegral kind, double t) const {
    bool on_grid = false;
    {
        std::lock_guard lock(mutex_);
        on_grid = std::binary_search(grid_.begin(), grid_.end(), t);
        if (on_grid) {
            if (auto it = memo_.find({kind, t}); it != memo_.end()) return it->second;
        }
    }
    const double value = bath_integral(kind, bath_, t, config_);
    if (on_grid) {
        std::lock_guard lock(mutex_);
        memo_.emplace(std::make_pair(kind, t), value);
    }
    return value;
}

std::size_t BathIntegralCache::memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

}  // namespace nhq
