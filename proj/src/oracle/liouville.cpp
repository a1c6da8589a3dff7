#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "nhq/errors.hpp"
#include "nhq/oracle.hpp"

namespace nhq::oracle {

namespace {

using Mat = Eigen::Matrix2cd;

Mat liouville_rhs(const Mat& hr, const Mat& hi, const Mat& rho) {
    const complex i{0.0, 1.0};
    const complex tr = (rho * hi).trace();
    return -i * (hr * rho - rho * hr) + (hi * rho + rho * hi) - 2.0 * tr * rho;
}

}  // namespace

LiouvilleResult compare_qubit_nonhermitian(const QubitSpec& q, const DensityMatrix2& rho0, double t,
                                           std::size_t steps) {
    if (steps < 1) throw DomainError("Liouville oracle needs at least one step");
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("Liouville oracle needs finite t >= 0");
    const complex i{0.0, 1.0};
    const Mat h = q.hamiltonian();
    const Mat hr = 0.5 * (h + h.adjoint());
    const Mat hi = (h - h.adjoint()) / (2.0 * i);

    const Mat u = (-i * t * h).exp();
    const Mat evolved = u * rho0.matrix() * u.adjoint();
    const double norm = evolved.trace().real();
    if (!(norm >= 1e-300)) throw NormalizationCollapse("Tr[U rho U^dag] underflowed at t = " + std::to_string(t));
    Mat closed = evolved / norm;
    closed = 0.5 * (closed + closed.adjoint()).eval();

    Mat rho = rho0.matrix();
    const double dt = t / static_cast<double>(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const Mat k1 = liouville_rhs(hr, hi, rho);
        const Mat k2 = liouville_rhs(hr, hi, rho + 0.5 * dt * k1);
        const Mat k3 = liouville_rhs(hr, hi, rho + 0.5 * dt * k2);
        const Mat k4 = liouville_rhs(hr, hi, rho + dt * k3);
        rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    LiouvilleResult r{DensityMatrix2(closed), DensityMatrix2(rho), 0.0};
    r.max_discrepancy = (closed - rho).cwiseAbs().maxCoeff();
    return r;
}

DensityMatrix2 evolve_qubit_nonhermitian(const QubitSpec& q, const DensityMatrix2& rho0, double t, std::size_t steps) {
    return compare_qubit_nonhermitian(q, rho0, t, steps).closed_form;
}

}  // namespace nhq::oracle
