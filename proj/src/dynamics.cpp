#include "nhq/dynamics.hpp"

#include <cmath>
#include <string>

#include "nhq/errors.hpp"

namespace nhq {

namespace {

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and >= 0, got " + std::to_string(t));
}

}  // namespace

Eigen::Vector3d DensityMatrix2::bloch_vector() const {
    return {2.0 * m_(0, 1).real(), -2.0 * m_(0, 1).imag(), (m_(0, 0) - m_(1, 1)).real()};
}

bool DensityMatrix2::is_valid(double tol) const {
    if (std::abs(m_(1, 0) - std::conj(m_(0, 1))) > tol) return false;
    if (std::abs(m_(0, 0).imag()) > tol || std::abs(m_(1, 1).imag()) > tol) return false;
    if (std::abs((m_(0, 0) + m_(1, 1)).real() - 1.0) > tol) return false;
    const double det = m_(0, 0).real() * m_(1, 1).real() - std::norm(m_(0, 1));
    return det >= -tol && m_(0, 0).real() >= -tol && m_(1, 1).real() >= -tol;
}

InitialState InitialState::from_expectations(double sz, complex splus) {
    InitialState s{sz, splus, std::conj(splus)};
    s.validate();
    return s;
}

InitialState InitialState::from_bloch_angles(double theta0, double phi0) {
    if (!std::isfinite(theta0) || !std::isfinite(phi0)) throw DomainError("Bloch angles must be finite");
    const complex sminus = 0.5 * std::sin(theta0) * std::polar(1.0, -phi0);
    return {std::cos(theta0), std::conj(sminus), sminus};
}

InitialState InitialState::equal_superposition() { return {0.0, {0.5, 0.0}, {0.5, 0.0}}; }

double InitialState::bloch_length() const { return std::sqrt(sz * sz + 4.0 * std::norm(sminus)); }

void InitialState::validate() const {
    if (!std::isfinite(sz) || !std::isfinite(splus.real()) || !std::isfinite(splus.imag())) {
        throw DomainError("initial expectation values must be finite");
    }
    if (std::abs(sminus - std::conj(splus)) > 1e-14) throw DomainError("<sigma_-> must equal conj(<sigma_+>)");
    if (bloch_length() > 1.0 + 1e-12) throw DomainError("initial Bloch vector longer than 1");
}

DensityMatrix2 InitialState::density() const {
    Eigen::Matrix2cd m;
    m << 0.5 * (1.0 + sz), sminus, splus, 0.5 * (1.0 - sz);
    return DensityMatrix2(m);
}

double decoherence_function(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    require_time(t);
    const double w0 = omega0(q);
    return std::exp(-w0 * w0 * bath.gamma(t));
}

double decoherence_function(const QubitSpec& q, const BathSpec& b, double t) {
    return decoherence_function(q, BathIntegralCache(b), t);
}

double bath_phase(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    require_time(t);
    switch (q.symmetry) {
        case SymmetryClass::Hermitian: return bath.omega_phase_hermitian(q.theta, t);
        case SymmetryClass::PTSymmetric: return -bath.omega_phase_hermitian(q.theta, t);
        case SymmetryClass::AntiPTSymmetric: return bath.omega2(q.theta, t) - bath.omega1(q.theta, t);
    }
    return 0.0;
}

double bath_phase_rate(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    require_time(t);
    switch (q.symmetry) {
        case SymmetryClass::Hermitian: return bath.omega_phase_hermitian_rate(q.theta, t);
        case SymmetryClass::PTSymmetric: return -bath.omega_phase_hermitian_rate(q.theta, t);
        case SymmetryClass::AntiPTSymmetric: return bath.omega2_rate(q.theta, t) - bath.omega1_rate(q.theta, t);
    }
    return 0.0;
}

double phase_function(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    return omega0(q) * bath_phase(q, bath, t);
}

double phase_function(const QubitSpec& q, const BathSpec& b, double t) {
    return phase_function(q, BathIntegralCache(b), t);
}

DephasingFactors dephasing_factors(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    return {decoherence_function(q, bath, t), phase_function(q, bath, t)};
}

DensityMatrix2 reduced_density_matrix(const QubitSpec& q, const BathIntegralCache& bath, const InitialState& init,
                                      double t) {
    init.validate();
    const double w0 = omega0(q);
    const auto f = dephasing_factors(q, bath, t);
    const complex rho12 = init.sminus * std::polar(f.decoherence, 2.0 * w0 * t - f.phase);
    Eigen::Matrix2cd m;
    m << 0.5 * (1.0 + init.sz), rho12, std::conj(rho12), 0.5 * (1.0 - init.sz);
    return DensityMatrix2(m);
}

DensityMatrix2 reduced_density_matrix(const QubitSpec& q, const BathSpec& b, const InitialState& init, double t) {
    return reduced_density_matrix(q, BathIntegralCache(b), init, t);
}

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
    if (n < 2) throw DomainError("uniform_grid needs at least 2 points");
    if (!(t1 > t0) || !std::isfinite(t0) || !std::isfinite(t1)) throw DomainError("uniform_grid needs t1 > t0");
    std::vector<double> ts(n);
    const double h = (t1 - t0) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) ts[i] = t0 + h * static_cast<double>(i);
    ts.back() = t1;
    return ts;
}

}  // namespace nhq
