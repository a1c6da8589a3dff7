// bath_integrals.hpp — continuum bath integrals gamma, d gamma/d beta, Omega, Omega1, Omega2 and their t-rates

#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "nhq/model.hpp"

namespace nhq {

struct QuadratureConfig {
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    /// Upper integration limit is w_max_factor * wc.
    double w_max_factor{60.0};
    std::size_t max_subdivisions{2000};
    /// Multiplies the small-w series-patch width (tests halve it).
    double patch_scale{1.0};

    void validate() const;
};

/// theta-free bath integrals. Omega-type integrals are returned per unit theta.
enum class BathIntegral {
    Gamma,               // 4 int J (1-cos wt)/w^2 coth(beta w/2)
    GammaBetaRate,       // d Gamma / d beta
    HermitianPhase,      // Omega/theta   = 4 int J (wt - sin wt)/w^2
    HermitianPhaseRate,  // (dOmega/dt)/theta  = 4 int J (1-cos wt)/w
    BathPhase,           // Omega1/theta  = 4 int J (1-cos wt)/w^2
    BathPhaseRate,       // (dOmega1/dt)/theta = 4 int J sin(wt)/w
};

/// J(w) = j0 w^(1+mu) e^(-w/wc). Throws DomainError for w < 0.
double spectral_density(const BathSpec& b, double w);

/// int_0^inf J(w) dw = j0 Gamma(2+mu) wc^(2+mu).
double spectral_moment(const BathSpec& b);

/// Width of the analytically integrated small-w patch [0, w_s].
double series_patch_width(const BathSpec& b, double t, const QuadratureConfig& cfg = {});

/// Evaluates one integral at time t >= 0. Throws DomainError for t < 0 and
/// QuadratureFailure when refinement runs out of subdivisions.
double bath_integral(BathIntegral kind, const BathSpec& b, double t, const QuadratureConfig& cfg = {});

double gamma(const BathSpec& b, double t, const QuadratureConfig& cfg = {});
double dgamma_dbeta(const BathSpec& b, double t, const QuadratureConfig& cfg = {});
double omega_phase_hermitian(const BathSpec& b, double theta, double t, const QuadratureConfig& cfg = {});
double omega1(const BathSpec& b, double theta, double t, const QuadratureConfig& cfg = {});
/// Closed form 2 theta t^2 int J.
double omega2(const BathSpec& b, double theta, double t);

double omega_phase_hermitian_rate(const BathSpec& b, double theta, double t, const QuadratureConfig& cfg = {});
double omega1_rate(const BathSpec& b, double theta, double t, const QuadratureConfig& cfg = {});
double omega2_rate(const BathSpec& b, double theta, double t);

/// Memoizes integrals at registered time-grid nodes. Other times are computed
/// fresh on every call, so results never depend on call history. Thread-safe.
class BathIntegralCache {
public:
    explicit BathIntegralCache(BathSpec bath, QuadratureConfig config = {});

    BathIntegralCache(const BathIntegralCache&) = delete;
    BathIntegralCache& operator=(const BathIntegralCache&) = delete;

    const BathSpec& bath() const noexcept { return bath_; }
    const QuadratureConfig& config() const noexcept { return config_; }

    /// Adds exact t values whose integrals are kept once computed.
    void register_grid(std::span<const double> ts);

    double get(BathIntegral kind, double t) const;

    double gamma(double t) const { return get(BathIntegral::Gamma, t); }
    double dgamma_dbeta(double t) const { return get(BathIntegral::GammaBetaRate, t); }
    double omega_phase_hermitian(double theta, double t) const { return theta * get(BathIntegral::HermitianPhase, t); }
    double omega1(double theta, double t) const { return theta * get(BathIntegral::BathPhase, t); }
    double omega2(double theta, double t) const { return 2.0 * theta * t * t * moment_; }
    double omega_phase_hermitian_rate(double theta, double t) const {
        return theta * get(BathIntegral::HermitianPhaseRate, t);
    }
    double omega1_rate(double theta, double t) const { return theta * get(BathIntegral::BathPhaseRate, t); }
    double omega2_rate(double theta, double t) const { return 4.0 * theta * t * moment_; }

    std::size_t memo_size() const;

private:
    BathSpec bath_;
    QuadratureConfig config_;
    double moment_;
    mutable std::mutex mutex_;
    std::vector<double> grid_;  // sorted, unique
    mutable std::map<std::pair<BathIntegral, double>, double> memo_;
};

}  // namespace nhq
