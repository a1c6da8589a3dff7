#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "nhq/bath_integrals.hpp"
#include "nhq/errors.hpp"
#include "nhq/oracle.hpp"

namespace nhq::oracle {

namespace {

constexpr double kOccupancyFloor = 1e-8;

double one_minus_cos(double x) {
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

double sum_g2(const DiscreteBathSpec& db) {
    double s = 0.0;
    for (const auto& m : db.modes) s += m.g * m.g;
    return s;
}

}  // namespace

void DiscreteBathSpec::validate() const {
    if (modes.empty()) throw DomainError("discrete bath needs at least one mode");
    for (const auto& m : modes) {
        if (!(m.omega > 0.0) || !std::isfinite(m.omega)) throw DomainError("mode frequencies must be > 0");
        if (!std::isfinite(m.g)) throw DomainError("mode couplings must be finite");
    }
    if (fock_cutoff < 8) throw DomainError("fock_cutoff must be >= 8");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be > 0");
}

int DiscreteBathSpec::effective_cutoff() const {
    int cutoff = fock_cutoff;
    for (const auto& m : modes) {
        while (std::exp(-beta * m.omega * cutoff) >= kOccupancyFloor) ++cutoff;
    }
    return cutoff;
}

DiscreteBathSpec single_mode(double omega, double g, double beta, int cutoff) {
    DiscreteBathSpec db{{{omega, g}}, cutoff, beta};
    db.validate();
    return db;
}

DiscreteBathSpec sampled_bath(const BathSpec& b, std::size_t n, double w_max) {
    b.validate();
    constexpr std::size_t kRule = 20;
    if (n == 0 || n % kRule != 0) throw DomainError("sampled_bath needs a positive multiple of 20 modes");
    if (!(w_max > 0.0)) throw DomainError("sampled_bath needs w_max > 0");
    using Rule = boost::math::quadrature::gauss<double, kRule>;
    // w = u^p with p = 1/(1+mu) makes J(w) dw / w smooth at the origin.
    const double p = 1.0 / (1.0 + b.mu);
    const double u_max = std::pow(w_max, 1.0 + b.mu);
    const std::size_t panels = n / kRule;
    const double h = u_max / static_cast<double>(panels);
    DiscreteBathSpec db;
    db.beta = b.beta;
    db.modes.reserve(n);
    const auto& x = Rule::abscissa();
    const auto& wt = Rule::weights();
    for (std::size_t k = 0; k < panels; ++k) {
        const double c = (static_cast<double>(k) + 0.5) * h;
        auto add = [&](double xi, double weight) {
            const double u = c + 0.5 * h * xi;
            const double w = std::pow(u, p);
            const double dw = 0.5 * h * weight * p * std::pow(u, p - 1.0);
            db.modes.push_back({w, std::sqrt(spectral_density(b, w) * dw)});
        };
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] == 0.0) {
                add(0.0, wt[j]);
            } else {
                add(-x[j], wt[j]);
                add(x[j], wt[j]);
            }
        }
    }
    return db;
}

double discrete_gamma(const DiscreteBathSpec& db, double t) {
    double s = 0.0;
    for (const auto& m : db.modes) {
        const double coth = (2.0 + std::expm1(-db.beta * m.omega)) / -std::expm1(-db.beta * m.omega);
        s += m.g * m.g * one_minus_cos(m.omega * t) / (m.omega * m.omega) * coth;
    }
    return 4.0 * s;
}

double discrete_omega_hermitian(const DiscreteBathSpec& db, double theta, double t) {
    double s = 0.0;
    for (const auto& m : db.modes) {
        const double x = m.omega * t;
        s += m.g * m.g * (x - std::sin(x)) / (m.omega * m.omega);
    }
    return 4.0 * theta * s;
}

double discrete_omega1(const DiscreteBathSpec& db, double theta, double t) {
    double s = 0.0;
    for (const auto& m : db.modes) s += m.g * m.g * one_minus_cos(m.omega * t) / (m.omega * m.omega);
    return 4.0 * theta * s;
}

double discrete_omega2(const DiscreteBathSpec& db, double theta, double t) { return 2.0 * theta * t * t * sum_g2(db); }

complex discrete_dephasing_exact(const DiscreteBathSpec& db, const QubitSpec& q, double t) {
    db.validate();
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("discrete dephasing needs finite t >= 0");
    const double w0 = omega0(q);
    double phase = 0.0;
    switch (q.symmetry) {
        case SymmetryClass::Hermitian: phase = discrete_omega_hermitian(db, q.theta, t); break;
        case SymmetryClass::PTSymmetric: phase = -discrete_omega_hermitian(db, q.theta, t); break;
        case SymmetryClass::AntiPTSymmetric:
            phase = discrete_omega2(db, q.theta, t) - discrete_omega1(db, q.theta, t);
            break;
    }
    return std::polar(std::exp(-w0 * w0 * discrete_gamma(db, t)), 2.0 * w0 * t - w0 * phase);
}

}  // namespace nhq::oracle
