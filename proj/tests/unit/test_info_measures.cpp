#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nhq/dynamics.hpp"
#include "nhq/errors.hpp"
#include "nhq/info_measures.hpp"

using namespace nhq;

namespace {

const double kLn2 = std::numbers::ln2;
const BathSpec kBath{1.0, -0.5, 1.0, 0.5};
const QubitSpec kTable{SymmetryClass::Hermitian, 1.0, 0.5, 0.8, 0.6};

// Entropies straight from the eigenvalues (1 +- v)/2.
double shannon(double v) {
    const double p = 0.5 * (1 + v), q = 0.5 * (1 - v);
    return -(p > 0 ? p * std::log(p) : 0.0) - (q > 0 ? q * std::log(q) : 0.0);
}

double binary_kl(double vt, double v) {
    const double pt = 0.5 * (1 + vt), qt = 0.5 * (1 - vt);
    const double p = 0.5 * (1 + v), q = 0.5 * (1 - v);
    return pt * std::log(pt / p) + qt * std::log(qt / q);
}

double v_of(const QubitSpec& q, const BathSpec& b, double t) {
    const double w0 = omega0(q);
    return std::exp(-w0 * w0 * gamma(b, t));
}

}  // namespace

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(1.0) == 0.0);
    CHECK(von_neumann_entropy(0.0) == doctest::Approx(kLn2).epsilon(1e-15));
    // eigenvalues (0.75, 0.25)
    CHECK(von_neumann_entropy(0.5) == doctest::Approx(0.5623351446188083).epsilon(1e-14));
    for (double v = 0.0; v <= 1.0; v += 0.05) CHECK(von_neumann_entropy(v) == doctest::Approx(shannon(v)).epsilon(1e-12));
    CHECK_THROWS_AS(von_neumann_entropy(1.0 + 1e-9), DomainError);
    CHECK_THROWS_AS(von_neumann_entropy(-0.1), DomainError);
}

TEST_CASE("entropy deficit") {
    CHECK(entropy_deficit(0.0) == 0.0);
    CHECK(entropy_deficit(1.0) == doctest::Approx(kLn2).epsilon(1e-15));
    CHECK(entropy_deficit(0.5) == doctest::Approx(kLn2 - 0.5623351446188083).epsilon(1e-14));
    for (double v = 0.05; v < 1.0; v += 0.05) CHECK(std::abs(entropy_deficit(v) - (kLn2 - von_neumann_entropy(v))) < 1e-15);
    // both branches at the switch point
    const double below = std::nextafter(1e-3, 0.0);
    CHECK(entropy_deficit(below) == doctest::Approx(below * std::atanh(below) + 0.5 * std::log1p(-below * below)).epsilon(1e-12));
    CHECK(entropy_deficit(1e-100) == doctest::Approx(5e-201).epsilon(1e-15));
    CHECK(entropy_deficit(1e-9) > entropy_deficit(1e-10));
    CHECK(von_neumann_entropy(1e-9) == von_neumann_entropy(1e-10));
    CHECK_THROWS_AS(entropy_deficit(-1e-3), DomainError);
}

TEST_CASE("Renyi entropy") {
    for (double r : {0.3, 0.5, 2.0, 7.0}) CHECK(renyi_entropy(0.0, r) == doctest::Approx(kLn2).epsilon(1e-14));
    CHECK(renyi_entropy(0.5, 2.0) == doctest::Approx(-std::log(0.625)).epsilon(1e-14));
    CHECK(std::abs(renyi_entropy(0.5, 1.0 + 1e-6) - von_neumann_entropy(0.5)) < 1e-5);
    CHECK(std::abs(renyi_entropy(0.5, 1.0 - 1e-6) - von_neumann_entropy(0.5)) < 1e-5);
    CHECK(renyi_entropy(0.37, 1.0) == von_neumann_entropy(0.37));
    CHECK_THROWS_AS(renyi_entropy(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(renyi_entropy(0.5, -1.0), DomainError);
}

TEST_CASE("Renyi entropy is nonincreasing in r") {
    for (int k = 1; k <= 9; ++k) {
        const double v = 0.1 * k;
        double last = INFINITY;
        for (double r : {0.5, 1.0, 2.0, 4.0, 10.0}) {
            const double s = renyi_entropy(v, r);
            CHECK(s <= last);
            CHECK(s >= 0.0);
            CHECK(s <= kLn2 + 1e-15);
            last = s;
        }
    }
}

TEST_CASE("KL divergence") {
    CHECK(kl_divergence(0.3, 0.3) == 0.0);
    CHECK(kl_divergence(0.0, 0.5) == doctest::Approx(0.5 * std::log(4.0 / 3.0)).epsilon(1e-14));
    for (double vt : {0.0, 0.2, 0.5, 0.9}) {
        for (double v : {0.0, 0.3, 0.6, 0.95}) {
            CHECK(std::abs(kl_divergence(vt, v) - binary_kl(vt, v)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(kl_divergence(1.0, 0.5), DomainError);
    CHECK_THROWS_AS(kl_divergence(0.5, 1.0), DomainError);
}

TEST_CASE("Fisher information matches second differences of KL") {
    BathIntegralCache cache(kBath);
    const QubitSpec apt = kTable.with_class(SymmetryClass::AntiPTSymmetric);
    const double t = 0.5;

    const double hb = 1e-3;
    BathSpec lo = kBath, hi = kBath;
    lo.beta -= hb;
    hi.beta += hb;
    const double v = v_of(apt, kBath, t);
    const double fd_beta =
        (kl_divergence(v_of(apt, hi, t), v) + kl_divergence(v_of(apt, lo, t), v)) / (hb * hb);
    CHECK(fisher_beta(apt, cache, t) == doctest::Approx(fd_beta).epsilon(1e-4));

    const double hw = 1e-4;
    for (SymmetryClass c : kAllClasses) {
        const QubitSpec q = kTable.with_class(c);
        const double w0 = omega0(q);
        const double g = gamma(kBath, t);
        const double v0 = std::exp(-w0 * w0 * g);
        const double vp = std::exp(-(w0 + hw) * (w0 + hw) * g);
        const double vm = std::exp(-(w0 - hw) * (w0 - hw) * g);
        const double fd_w = (kl_divergence(vp, v0) + kl_divergence(vm, v0)) / (hw * hw);
        CHECK(fisher_omega0(q, cache, t) == doctest::Approx(fd_w).epsilon(1e-4));
    }
}

TEST_CASE("Fisher information domain and decay") {
    BathIntegralCache cache(kBath);
    CHECK_THROWS_AS(fisher_beta(kTable, cache, 0.0), DomainError);
    CHECK_THROWS_AS(fisher_omega0(kTable, cache, -1.0), DomainError);
    for (SymmetryClass c : kAllClasses) {
        const QubitSpec q = kTable.with_class(c);
        CHECK(fisher_beta(q, cache, 40.0) < 1e-12);
        CHECK(fisher_omega0(q, cache, 40.0) < 1e-12);
        CHECK(fisher_information(FisherParameter::Beta, q, cache, 0.4) == fisher_beta(q, cache, 0.4));
        CHECK(fisher_information(FisherParameter::Omega0, q, cache, 0.4) == fisher_omega0(q, cache, 0.4));
    }
    CHECK(parse_fisher_parameter("omega0") == FisherParameter::Omega0);
    CHECK(fisher_parameter_name(FisherParameter::Beta) == "beta");
    CHECK_THROWS_AS(parse_fisher_parameter("w0"), DomainError);
}

TEST_CASE("Fisher summary on synthetic curves") {
    CHECK_THROWS_AS(fisher_summary([](double) { return 0.0; }), EmptyCurve);

    const double peak = 1.2345678;
    const auto tri = [&](double t) { return std::max(0.0, 1.0 - std::abs(t - peak) / 0.5); };
    const auto s = fisher_summary(tri);
    CHECK(std::abs(s.t_max - peak) < 1e-6);
    CHECK(s.s_max == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(s.area == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(s.horizon == 20.0);

    // slow decay pushes the horizon out
    const auto slow = fisher_summary([](double t) { return t * std::exp(-t / 4.0); });
    CHECK(slow.horizon > 40.0);
    CHECK(slow.area == doctest::Approx(16.0).epsilon(1e-6));
    CHECK(slow.t_max == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("Fisher summary at the table1 preset") {
    BathIntegralCache cache(kBath);
    const QubitSpec h = kTable;
    const auto sb = fisher_summary([&](double t) { return fisher_beta(h, cache, t); });
    CHECK(sb.s_max == doctest::Approx(0.6113).epsilon(2e-3));
    CHECK(std::abs(sb.t_max - 0.1714) < 2e-3);
    const auto sw = fisher_summary([&](double t) { return fisher_omega0(h, cache, t); });
    CHECK(sw.s_max == doctest::Approx(0.3426).epsilon(2e-3));
    CHECK(std::abs(sw.t_max - 0.1713) < 2e-3);
    // horizon 20 vs 40
    const auto wide = fisher_summary([&](double t) { return fisher_omega0(h, cache, t); }, 40.0, 4000);
    CHECK(std::abs(wide.area - sw.area) < 1e-6);
    CHECK(std::abs(sw.area - sw.area_coarse) < 1e-6);
}

TEST_CASE("entropy limits") {
    BathIntegralCache cache(kBath);
    const QubitSpec fig2{SymmetryClass::Hermitian, 1.0, 0.56, 0.81, 0.86};
    CHECK(std::abs(von_neumann_entropy(bloch_length(fig2, cache, 0.0))) < 1e-10);
    CHECK(std::abs(von_neumann_entropy(bloch_length(fig2, cache, 20.0)) - kLn2) < 1e-3);
    double last = 0.0;
    for (double t : uniform_grid(0.0, 5.0, 101)) {
        const double s = von_neumann_entropy(bloch_length(fig2, cache, t));
        CHECK(s >= last);
        CHECK(s <= kLn2);
        last = s;
    }
}
