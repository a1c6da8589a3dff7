// dynamics.hpp — reduced qubit density matrix under pure dephasing for the three symmetry classes
//
// Populations are frozen; the coherence evolves as
//   rho12(t) = rho12(0) e^{2 i w0 t} e^{-i w0 Omt(t)} D(t),   D(t) = e^{-w0^2 gamma(t)}
// with Omt = Omega (H), -Omega (PT), Omega2 - Omega1 (APT).

#pragma once

#include <vector>

#include <Eigen/Core>

#include "nhq/bath_integrals.hpp"
#include "nhq/model.hpp"

namespace nhq {

class DensityMatrix2 {
public:
    DensityMatrix2() = default;
    explicit DensityMatrix2(const Eigen::Matrix2cd& m) : m_(m) {}

    complex rho11() const { return m_(0, 0); }
    complex rho12() const { return m_(0, 1); }
    complex rho21() const { return m_(1, 0); }
    complex rho22() const { return m_(1, 1); }
    const Eigen::Matrix2cd& matrix() const { return m_; }

    /// Bloch vector (2 Re rho12, -2 Im rho12, rho11 - rho22).
    Eigen::Vector3d bloch_vector() const;

    /// True if Hermitian, unit-trace and positive semidefinite within tol.
    bool is_valid(double tol = 1e-14) const;

private:
    Eigen::Matrix2cd m_{Eigen::Matrix2cd::Zero()};
};

/// Expectation values <sigma_z>, <sigma_+> = rho21, <sigma_-> = rho12.
struct InitialState {
    double sz{0.0};
    complex splus{0.5, 0.0};
    complex sminus{0.5, 0.0};

    static InitialState from_expectations(double sz, complex splus);
    /// Bloch vector (sin t0 cos p0, sin t0 sin p0, cos t0).
    static InitialState from_bloch_angles(double theta0, double phi0);
    /// rho11 = rho22 = rho12 = 1/2.
    static InitialState equal_superposition();

    /// Throws DomainError when the Bloch vector is longer than 1 or sminus != conj(splus).
    void validate() const;
    double bloch_length() const;
    DensityMatrix2 density() const;
};

struct DephasingFactors {
    double decoherence{1.0};  // D(t)
    double phase{0.0};        // w0 * Omt(t)
};

double decoherence_function(const QubitSpec& q, const BathIntegralCache& bath, double t);
double decoherence_function(const QubitSpec& q, const BathSpec& b, double t);

/// Class-dependent Omt(t) without the w0 factor.
double bath_phase(const QubitSpec& q, const BathIntegralCache& bath, double t);
/// d Omt / dt from the analytic rate integrals.
double bath_phase_rate(const QubitSpec& q, const BathIntegralCache& bath, double t);

double phase_function(const QubitSpec& q, const BathIntegralCache& bath, double t);
double phase_function(const QubitSpec& q, const BathSpec& b, double t);

DephasingFactors dephasing_factors(const QubitSpec& q, const BathIntegralCache& bath, double t);

DensityMatrix2 reduced_density_matrix(const QubitSpec& q, const BathIntegralCache& bath, const InitialState& init,
                                      double t);
DensityMatrix2 reduced_density_matrix(const QubitSpec& q, const BathSpec& b, const InitialState& init, double t);

/// n equally spaced points from t0 to t1 inclusive (n >= 2).
std::vector<double> uniform_grid(double t0, double t1, std::size_t n = 400);

}  // namespace nhq
