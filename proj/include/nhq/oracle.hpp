// oracle.hpp — brute-force checks of the closed forms
//
//  (a) bathless non-Hermitian qubit: normalized e^{-iHt} rho e^{iH^dag t} vs RK4 on the
//      nonlinear Liouville equation rho_t = -i[H_R, rho] + {H_I, rho} - 2 rho Tr(rho H_I);
//  (b) finite set of bath modes: closed-form discrete coherence vs Fock-truncated
//      evolution of the Hermitian counterpart h^D;
//  (c) Dyson map: eta rho^D eta^dag vs direct evolution under the Dyson image h.

#pragma once

#include <complex>
#include <vector>

#include "nhq/dynamics.hpp"
#include "nhq/model.hpp"

namespace nhq::oracle {

struct LiouvilleResult {
    DensityMatrix2 closed_form;
    DensityMatrix2 rk4;
    double max_discrepancy{};  // entrywise
};

/// Both integrations of the bathless qubit. Throws NormalizationCollapse when
/// Tr[U rho U^dag] < 1e-300 and DomainError for steps < 1 or t < 0.
LiouvilleResult compare_qubit_nonhermitian(const QubitSpec& q, const DensityMatrix2& rho0, double t,
                                           std::size_t steps);

/// The closed form of compare_qubit_nonhermitian.
DensityMatrix2 evolve_qubit_nonhermitian(const QubitSpec& q, const DensityMatrix2& rho0, double t,
                                         std::size_t steps = 10000);

struct BathMode {
    double omega{1.0};
    double g{0.0};
};

struct DiscreteBathSpec {
    std::vector<BathMode> modes;
    int fock_cutoff{24};
    double beta{0.5};

    void validate() const;
    /// fock_cutoff raised until e^{-beta omega_k cutoff} < 1e-8 for every mode.
    int effective_cutoff() const;
};

/// Single mode (omega, g) at inverse temperature beta.
DiscreteBathSpec single_mode(double omega, double g, double beta, int cutoff = 24);

/// n modes with g_k^2 = J(w_k) dw_k, where (w_k, dw_k) are composite Gauss-Legendre
/// nodes and weights in u = w^(1+mu) on [0, w_max]. n must be a multiple of 20.
DiscreteBathSpec sampled_bath(const BathSpec& b, std::size_t n, double w_max);

/// Discrete sums replacing the continuum integrals.
double discrete_gamma(const DiscreteBathSpec& db, double t);
double discrete_omega_hermitian(const DiscreteBathSpec& db, double theta, double t);
double discrete_omega1(const DiscreteBathSpec& db, double theta, double t);
double discrete_omega2(const DiscreteBathSpec& db, double theta, double t);

/// rho12(t)/rho12(0) = e^{2 i w0 t} e^{-i w0 Omt_d(t)} e^{-w0^2 gamma_d(t)} with the
/// class's discrete phase Omt_d.
complex discrete_dephasing_exact(const DiscreteBathSpec& db, const QubitSpec& q, double t);

/// rho12(t)/rho12(0) from evolving rho_S(0) x Omega_B under h^D on the truncated
/// Fock space (anti-PT class only; other classes throw DomainError). Throws
/// TruncationError when raising the cutoff by 4 moves the result by more than 1e-6.
complex discrete_dephasing_fock(const DiscreteBathSpec& db, const QubitSpec& q, double t);

/// Same evolution at a fixed cutoff, no convergence check.
complex discrete_dephasing_fock_at(const DiscreteBathSpec& db, const QubitSpec& q, double t, int cutoff);

struct DysonCheck {
    double discrepancy{};        // max entrywise difference of the reduced qubit matrices
    double eta_condition{1.0};   // condition number of eta on the truncated space
};

/// Single-mode Dyson-map check for the anti-PT qubit. Throws ConditioningFailure
/// when eta's condition number exceeds 1e12.
DysonCheck dyson_density_map(const DiscreteBathSpec& db, const QubitSpec& q, double t);
double verify_dyson_density_map(const DiscreteBathSpec& db, const QubitSpec& q, double t);

}  // namespace nhq::oracle
