// model.hpp — qubit and bath parameter types, spectral data of the three qubit classes

#pragma once

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Core>

namespace nhq {

using complex = std::complex<double>;

enum class SymmetryClass { Hermitian, PTSymmetric, AntiPTSymmetric };

inline constexpr std::array<SymmetryClass, 3> kAllClasses{
    SymmetryClass::Hermitian, SymmetryClass::PTSymmetric, SymmetryClass::AntiPTSymmetric};

/// Short label used in CSV headers and on the command line: H, PT, APT.
std::string_view short_name(SymmetryClass c) noexcept;

/// Parses H, PT or APT (case-sensitive). Throws DomainError otherwise.
SymmetryClass parse_symmetry_class(std::string_view label);

/// Two-level system
///
///   Hermitian:  [[ a+th,  xi+i*de], [ xi-i*de, -a+th ]]
///   PT:         [[ a+i*th, xi+i*de], [ xi-i*de,  a-i*th]]
///   anti-PT:    [[ a+i*th, xi+i*de], [-xi+i*de, -a+i*th]]
///
/// with a = alpha, de = delta, th = theta.
struct QubitSpec {
    SymmetryClass symmetry{SymmetryClass::Hermitian};
    double alpha{0.0};
    double delta{0.0};
    double xi{0.0};
    double theta{0.0};

    /// Throws DomainError for non-finite parameters and DegenerateGap outside
    /// the class's real-gap domain (equality included).
    void validate() const;

    /// The 2x2 system Hamiltonian of this class.
    Eigen::Matrix2cd hamiltonian() const;

    QubitSpec with_class(SymmetryClass c) const {
        QubitSpec q = *this;
        q.symmetry = c;
        return q;
    }
};

/// Bosonic bath with spectral density J(w) = j0 * w^(1+mu) * exp(-w/wc) at inverse temperature beta.
struct BathSpec {
    double j0{1.0};
    double mu{-0.5};
    double wc{1.0};
    double beta{0.5};

    void validate() const;
};

struct SpectralInfo {
    double omega0{};
    std::array<complex, 2> eigenvalues{};  // {c - omega0, c + omega0}
    double gap{};                          // 2 * omega0
    Eigen::Matrix2cd transform{};          // T with T H T^-1 = c - omega0 * sigma_z (not normalized)
};

/// Half the energy gap. Throws DegenerateGap when the radicand is <= 0.
double omega0(const QubitSpec& q);

SpectralInfo spectral_info(const QubitSpec& q);

/// Parity sigma_x combined with complex conjugation, applied as P H^* P.
Eigen::Matrix2cd pt_conjugate(const Eigen::Matrix2cd& h);

}  // namespace nhq
