#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "nhq/errors.hpp"
#include "nhq/oracle.hpp"

namespace nhq::oracle {

namespace {

using Mat = Eigen::MatrixXcd;

constexpr double kTruncationTol = 1e-6;
constexpr std::size_t kMaxDimension = 4096;

struct Ladder {
    Mat a;
    Mat x;  // a + a^dag
    Mat n;
};

Ladder ladder(int cutoff) {
    const int dim = cutoff + 1;
    Ladder l{Mat::Zero(dim, dim), Mat(), Mat::Zero(dim, dim)};
    for (int k = 1; k < dim; ++k) l.a(k - 1, k) = std::sqrt(static_cast<double>(k));
    for (int k = 0; k < dim; ++k) l.n(k, k) = k;
    l.x = l.a + l.a.adjoint();
    return l;
}

Mat thermal_state(const Ladder& l, double omega, double beta) {
    const auto dim = l.n.rows();
    Mat rho = Mat::Zero(dim, dim);
    double z = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) z += std::exp(-beta * omega * static_cast<double>(k));
    for (Eigen::Index k = 0; k < dim; ++k) rho(k, k) = std::exp(-beta * omega * static_cast<double>(k)) / z;
    return rho;
}

std::size_t step_count(double t) { return std::max<std::size_t>(2000, static_cast<std::size_t>(std::ceil(2000.0 * t))); }

void require_anti_pt(const QubitSpec& q) {
    if (q.symmetry != SymmetryClass::AntiPTSymmetric) {
        throw DomainError("Fock-space oracles are implemented for the anti-PT qubit only");
    }
}

// Real tridiagonal operator: d on the diagonal, up(j) at (j, j+1), lo(j) at (j+1, j).
struct Tridiagonal {
    Eigen::VectorXd d;
    Eigen::VectorXd up;
    Eigen::VectorXd lo;
};

void apply(const Tridiagonal& h, const Mat& in, Mat& out) {
    const auto dim = in.rows();
    for (Eigen::Index c = 0; c < in.cols(); ++c) {
        const complex* x = in.col(c).data();
        complex* y = out.col(c).data();
        y[0] = h.d(0) * x[0];
        if (dim > 1) y[0] += h.up(0) * x[1];
        for (Eigen::Index j = 1; j + 1 < dim; ++j) y[j] = h.lo(j - 1) * x[j - 1] + h.d(j) * x[j] + h.up(j) * x[j + 1];
        if (dim > 1) y[dim - 1] = h.lo(dim - 2) * x[dim - 2] + h.d(dim - 1) * x[dim - 1];
    }
}

// w <- exp(-i dt h) w by Taylor series. Steps are short (|dt h| ~ 1e-2), so
// the series reaches machine precision within a handful of terms.
void step(const Tridiagonal& h, double dt, Mat& w, Mat& term, Mat& next) {
    term = w;
    for (int k = 1; k <= 40; ++k) {
        apply(h, term, next);
        // multiply by -i dt / k without a complex-complex product
        const double f = dt / static_cast<double>(k);
        term.real() = f * next.imag();
        term.imag() = -f * next.real();
        w += term;
        if (term.squaredNorm() < 1e-36) return;
    }
    throw DomainError("Fock time step too long for the Taylor propagator");
}

// Bath propagator of one mode in the sigma_z = s block, omitting the qubit
// phase e^{i w0 s t}:
//   h_s(t) = omega n + (-w0 s + theta t omega) g (a + a^dag) - theta^2 t^2 omega g^2,
// stepped piecewise constant with midpoint times.
Mat mode_propagator(const Ladder& l, const BathMode& m, double w0, double theta, double s, double t) {
    const auto dim = l.n.rows();
    Mat w = Mat::Identity(dim, dim);
    if (t == 0.0) return w;
    const std::size_t steps = step_count(t);
    const double dt = t / static_cast<double>(steps);
    Tridiagonal h{Eigen::VectorXd(dim), Eigen::VectorXd(dim - 1), Eigen::VectorXd(dim - 1)};
    Mat term(dim, dim);
    Mat next(dim, dim);
    for (std::size_t k = 0; k < steps; ++k) {
        const double tm = (static_cast<double>(k) + 0.5) * dt;
        const double shift = theta * theta * tm * tm * m.omega * m.g * m.g;
        const double coupling = (-w0 * s + theta * tm * m.omega) * m.g;
        for (Eigen::Index j = 0; j < dim; ++j) h.d(j) = m.omega * static_cast<double>(j) - shift;
        for (Eigen::Index j = 0; j + 1 < dim; ++j) h.up(j) = h.lo(j) = coupling * std::sqrt(static_cast<double>(j + 1));
        step(h, dt, w, term, next);
    }
    return w;
}

}  // namespace

complex discrete_dephasing_fock_at(const DiscreteBathSpec& db, const QubitSpec& q, double t, int cutoff) {
    db.validate();
    require_anti_pt(q);
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("Fock oracle needs finite t >= 0");
    if (cutoff < 8) throw DomainError("Fock cutoff must be >= 8");
    const double total_dim = 2.0 * std::pow(static_cast<double>(cutoff + 1), static_cast<double>(db.modes.size()));
    if (total_dim > static_cast<double>(kMaxDimension)) {
        throw DomainError("truncated Hilbert space exceeds " + std::to_string(kMaxDimension) + " states");
    }
    const double w0 = omega0(q);
    const Ladder l = ladder(cutoff);
    // Modes commute and start in a product Gibbs state, so the bath trace factorizes.
    complex factor = std::polar(1.0, 2.0 * w0 * t);
    for (const auto& m : db.modes) {
        const Mat plus = mode_propagator(l, m, w0, q.theta, 1.0, t);
        const Mat minus = mode_propagator(l, m, w0, q.theta, -1.0, t);
        factor *= (plus * thermal_state(l, m.omega, db.beta) * minus.adjoint()).trace();
    }
    return factor;
}

complex discrete_dephasing_fock(const DiscreteBathSpec& db, const QubitSpec& q, double t) {
    db.validate();
    const int cutoff = db.effective_cutoff();
    const complex value = discrete_dephasing_fock_at(db, q, t, cutoff);
    const complex wider = discrete_dephasing_fock_at(db, q, t, cutoff + 4);
    if (std::abs(value - wider) > kTruncationTol) {
        throw TruncationError("Fock result moves by " + std::to_string(std::abs(value - wider)) +
                              " when the cutoff goes from " + std::to_string(cutoff) + " to " +
                              std::to_string(cutoff + 4));
    }
    return value;
}

DysonCheck dyson_density_map(const DiscreteBathSpec& db, const QubitSpec& q, double t) {
    db.validate();
    require_anti_pt(q);
    if (db.modes.size() != 1) throw DomainError("Dyson-map check uses a single bath mode");
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("Dyson-map check needs finite t >= 0");
    const complex i{0.0, 1.0};
    const BathMode m = db.modes.front();
    const double w0 = omega0(q);
    const double theta = q.theta;
    const Ladder l = ladder(db.effective_cutoff());
    const auto dim = l.n.rows();
    const Mat v = m.g * l.x;
    const Mat omega_b = thermal_state(l, m.omega, db.beta);

    // eta = e^{-theta t} e^{-theta t V_B}; V_B is Hermitian, so its spread of
    // eigenvalues fixes the condition number.
    Eigen::SelfAdjointEigenSolver<Mat> es(v);
    DysonCheck out;
    out.eta_condition = std::exp(std::abs(theta) * t * (es.eigenvalues().maxCoeff() - es.eigenvalues().minCoeff()));
    if (!(out.eta_condition <= 1e12)) {
        throw ConditioningFailure("Dyson map condition number " + std::to_string(out.eta_condition) + " exceeds 1e12");
    }
    const Mat eta = std::exp(-theta * t) * (-theta * t * v).exp();

    const std::size_t steps = step_count(t);
    const double dt = t / static_cast<double>(steps);
    Mat lhs[2];
    Mat rhs[2];
    const double sign[2] = {1.0, -1.0};
    for (int b = 0; b < 2; ++b) {
        const double s = sign[b];
        // H^D block: (-w0 s + i theta)(1 + V_B) + H_B
        const Mat hd = (-w0 * s + i * theta) * (Mat::Identity(dim, dim) + v) + m.omega * l.n;
        lhs[b] = eta * (-i * t * hd).exp();
        // h block: -w0 s + H_B - w0 s V_B + theta t tilde V_B - theta^2 t^2 omega g^2
        Mat w = Mat::Identity(dim, dim);
        Mat term(dim, dim);
        Mat next(dim, dim);
        Tridiagonal h{Eigen::VectorXd(dim), Eigen::VectorXd(dim - 1), Eigen::VectorXd(dim - 1)};
        for (std::size_t k = 0; k < steps; ++k) {
            const double tm = (static_cast<double>(k) + 0.5) * dt;
            for (Eigen::Index j = 0; j < dim; ++j) {
                h.d(j) = m.omega * static_cast<double>(j) - w0 * s - theta * theta * tm * tm * m.omega * m.g * m.g;
            }
            for (Eigen::Index j = 0; j + 1 < dim; ++j) {
                const double root = std::sqrt(static_cast<double>(j + 1));
                h.up(j) = -w0 * s * m.g * root - theta * tm * m.omega * m.g * root;
                h.lo(j) = -w0 * s * m.g * root + theta * tm * m.omega * m.g * root;
            }
            step(h, dt, w, term, next);
        }
        rhs[b] = w;
    }

    // Reduced qubit matrix from rho_S(0) = equal superposition, normalized.
    auto reduced = [&](const Mat (&wb)[2]) {
        Eigen::Matrix2cd r;
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) r(x, y) = 0.5 * (wb[x] * omega_b * wb[y].adjoint()).trace();
        }
        return Eigen::Matrix2cd(r / r.trace());
    };
    out.discrepancy = (reduced(lhs) - reduced(rhs)).cwiseAbs().maxCoeff();
    return out;
}

double verify_dyson_density_map(const DiscreteBathSpec& db, const QubitSpec& q, double t) {
    return dyson_density_map(db, q, t).discrepancy;
}

}  // namespace nhq::oracle
