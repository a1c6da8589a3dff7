#include "nhq/model.hpp"

#include <cmath>
#include <string>

#include "nhq/errors.hpp"

namespace nhq {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string("parameter ") + name + " must be finite");
    }
}

double gap_radicand(const QubitSpec& q) {
    const double a2 = q.alpha * q.alpha;
    const double d2 = q.delta * q.delta;
    const double x2 = q.xi * q.xi;
    switch (q.symmetry) {
        case SymmetryClass::Hermitian: return a2 + d2 + x2;
        case SymmetryClass::PTSymmetric: return x2 + d2 - q.theta * q.theta;
        case SymmetryClass::AntiPTSymmetric: return a2 - d2 - x2;
    }
    return 0.0;
}

// H = c*1 + [[a, b], [d, -a]]
struct Decomposition {
    complex c, a, b, d;
};

Decomposition decompose(const QubitSpec& q) {
    const complex i{0.0, 1.0};
    const complex b{q.xi, q.delta};
    switch (q.symmetry) {
        case SymmetryClass::Hermitian: return {q.theta, q.alpha, b, std::conj(b)};
        case SymmetryClass::PTSymmetric: return {q.alpha, i * q.theta, b, std::conj(b)};
        case SymmetryClass::AntiPTSymmetric: return {i * q.theta, q.alpha, b, complex{-q.xi, q.delta}};
    }
    return {};
}

}  // namespace

std::string_view short_name(SymmetryClass c) noexcept {
    switch (c) {
        case SymmetryClass::Hermitian: return "H";
        case SymmetryClass::PTSymmetric: return "PT";
        case SymmetryClass::AntiPTSymmetric: return "APT";
    }
    return "?";
}

SymmetryClass parse_symmetry_class(std::string_view label) {
    if (label == "H") return SymmetryClass::Hermitian;
    if (label == "PT") return SymmetryClass::PTSymmetric;
    if (label == "APT") return SymmetryClass::AntiPTSymmetric;
    throw DomainError("unknown symmetry class '" + std::string(label) + "' (expected H, PT or APT)");
}

void QubitSpec::validate() const {
    require_finite(alpha, "alpha");
    require_finite(delta, "delta");
    require_finite(xi, "xi");
    require_finite(theta, "theta");
    if (gap_radicand(*this) <= 0.0) {
        throw DegenerateGap(std::string("no real energy gap for ") + std::string(short_name(symmetry)) +
                            " qubit: omega0^2 = " + std::to_string(gap_radicand(*this)));
    }
}

Eigen::Matrix2cd QubitSpec::hamiltonian() const {
    const auto [c, a, b, d] = decompose(*this);
    Eigen::Matrix2cd h;
    h << c + a, b, d, c - a;
    return h;
}

void BathSpec::validate() const {
    require_finite(j0, "j0");
    require_finite(mu, "mu");
    require_finite(wc, "wc");
    require_finite(beta, "beta");
    if (!(j0 > 0.0)) throw DomainError("j0 must be > 0");
    if (!(mu > -1.0)) throw DomainError("mu must be > -1");
    if (!(wc > 0.0)) throw DomainError("wc must be > 0");
    if (!(beta > 0.0)) throw DomainError("beta must be > 0");
}

double omega0(const QubitSpec& q) {
    q.validate();
    return std::sqrt(gap_radicand(q));
}

SpectralInfo spectral_info(const QubitSpec& q) {
    SpectralInfo info;
    info.omega0 = omega0(q);
    info.gap = 2.0 * info.omega0;

    const auto [c, a, b, d] = decompose(q);
    const double w0 = info.omega0;
    info.eigenvalues = {c - w0, c + w0};

    if (b == complex{} && d == complex{}) {
        // Already diagonal: diag(c+a, c-a) with a = +-omega0.
        if (a.real() > 0.0) {
            info.transform << 0.0, 1.0, 1.0, 0.0;
        } else {
            info.transform.setIdentity();
        }
    } else {
        info.transform << w0 - a, -b, w0 + a, b;
    }
    return info;
}

Eigen::Matrix2cd pt_conjugate(const Eigen::Matrix2cd& h) {
    Eigen::Matrix2cd p;
    p << 0.0, 1.0, 1.0, 0.0;
    return p * h.conjugate() * p;
}

}  // namespace nhq
