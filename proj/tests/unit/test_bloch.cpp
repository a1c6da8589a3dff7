#include <cmath>
#include <numbers>

#include "doctest.h"
#include "nhq/bloch.hpp"
#include "nhq/dynamics.hpp"
#include "nhq/errors.hpp"

using namespace nhq;

namespace {

const BathSpec kBath{1.0, -0.5, 1.0, 0.5};
const QubitSpec kFig6{SymmetryClass::Hermitian, 0.9, 0.38, 0.8, 0.6};
const TrajectoryParams kTilted{3.0 * std::numbers::pi / 8.0, 0.0};

}  // namespace

TEST_CASE("trivial trajectories") {
    BathIntegralCache cache(kBath);
    for (SymmetryClass c : kAllClasses) {
        const QubitSpec q = kFig6.with_class(c);
        for (double t : {0.0, 0.7, 3.0}) {
            const BlochState pole = spin_vector(q, cache, {0.0, 0.5}, t);
            CHECK(pole.sx == 0.0);
            CHECK(pole.sy == 0.0);
            CHECK(pole.sz == 1.0);
            CHECK(axis_distance(q, cache, {0.0, 0.5}, t) == 0.0);
            CHECK(linear_velocity(q, cache, {0.0, 0.5}, t) == 0.0);
        }
        const BlochState eq = spin_vector(q, cache, {std::numbers::pi / 2, 0.0}, 0.0);
        CHECK(eq.sx == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(eq.sy) < 1e-15);
        CHECK(std::abs(eq.sz) < 1e-15);
        CHECK(phase(q, cache, {1.0, 0.25}, 0.0) == 0.25);
        const double w0 = omega0(q);
        CHECK(angular_velocity(q, cache, 0.0) == doctest::Approx(-2.0 * w0).epsilon(1e-15));
        CHECK(normalized_angular_velocity(q, cache, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(axis_distance(q, cache, kTilted, 0.0) == doctest::Approx(std::sin(kTilted.theta0)).epsilon(1e-15));
        CHECK(linear_velocity(q, cache, kTilted, 0.0) ==
              doctest::Approx(-2.0 * w0 * std::sin(kTilted.theta0)).epsilon(1e-14));
    }
}

TEST_CASE("pure Larmor precession without the non-Hermitian parameter") {
    BathIntegralCache cache(kBath);
    QubitSpec q = kFig6;
    q.theta = 0.0;
    for (SymmetryClass c : kAllClasses) {
        const QubitSpec qc = q.with_class(c);
        const double w0 = omega0(qc);
        for (double t : {0.5, 1.5, 4.0}) {
            CHECK(phase(qc, cache, {1.0, 0.3}, t) == 0.3 - 2.0 * w0 * t);
            CHECK(angular_velocity(qc, cache, t) == doctest::Approx(-2.0 * w0).epsilon(1e-15));
        }
    }
}

TEST_CASE("anti-PT phase from the bath integrals") {
    BathIntegralCache cache(kBath);
    const QubitSpec apt = kFig6.with_class(SymmetryClass::AntiPTSymmetric);
    const double w0 = omega0(apt);
    const double expected = -2.0 * w0 + w0 * (omega2(kBath, 0.6, 1.0) - omega1(kBath, 0.6, 1.0));
    CHECK(phase(apt, cache, kTilted, 1.0) == doctest::Approx(expected).epsilon(1e-13));
    const BlochState s = spin_vector(apt, cache, kTilted, 1.0);
    const double d = decoherence_function(apt, cache, 1.0);
    CHECK(s.sx == doctest::Approx(std::sin(kTilted.theta0) * std::cos(expected) * d).epsilon(1e-12));
    CHECK(s.sy == doctest::Approx(std::sin(kTilted.theta0) * std::sin(expected) * d).epsilon(1e-12));
    CHECK(s.sz == std::cos(kTilted.theta0));
}

TEST_CASE("angular velocity matches the differenced phase") {
    BathIntegralCache cache(kBath);
    const double h = 1e-5;
    for (SymmetryClass c : kAllClasses) {
        const QubitSpec q = kFig6.with_class(c);
        for (double t : uniform_grid(0.1, 5.0, 50)) {
            const double fd = (phase(q, cache, kTilted, t + h) - phase(q, cache, kTilted, t - h)) / (2 * h);
            const double av = angular_velocity(q, cache, t);
            CHECK(std::abs(av - fd) <= 1e-6 * std::abs(fd) + 1e-9);
        }
    }
}

TEST_CASE("spin vector is consistent with the reduced density matrix") {
    BathIntegralCache cache(kBath);
    const TrajectoryParams tp{1.1, 0.4};
    const InitialState init = InitialState::from_bloch_angles(tp.theta0, tp.phi0);
    for (SymmetryClass c : kAllClasses) {
        const QubitSpec q = kFig6.with_class(c);
        for (double t : uniform_grid(0.0, 5.0, 26)) {
            const Eigen::Vector3d v = reduced_density_matrix(q, cache, init, t).bloch_vector();
            const BlochState s = spin_vector(q, cache, tp, t);
            CHECK(std::abs(v(0) - s.sx) < 1e-12);
            CHECK(std::abs(v(1) - s.sy) < 1e-12);
            CHECK(std::abs(v(2) - s.sz) < 1e-12);
            CHECK(s.sz == std::cos(tp.theta0));
        }
    }
}

TEST_CASE("distance ordering and velocity envelopes") {
    BathIntegralCache cache(kBath);
    const QubitSpec h = kFig6;
    const QubitSpec pt = kFig6.with_class(SymmetryClass::PTSymmetric);
    const QubitSpec apt = kFig6.with_class(SymmetryClass::AntiPTSymmetric);
    double last_radius = 1.0;
    for (double t : uniform_grid(0.025, 5.0, 200)) {
        CAPTURE(t);
        CHECK(axis_distance(apt, cache, kTilted, t) > axis_distance(pt, cache, kTilted, t));
        CHECK(axis_distance(pt, cache, kTilted, t) > axis_distance(h, cache, kTilted, t));
        const BlochState s = spin_vector(apt, cache, kTilted, t);
        const double radius = std::hypot(s.sx, s.sy);
        CHECK(radius <= last_radius);
        last_radius = radius;
    }
    const double va0 = std::abs(linear_velocity(apt, cache, kTilted, 0.0));
    const double vh0 = std::abs(linear_velocity(h, cache, kTilted, 0.0));
    for (double t : uniform_grid(1.0, 5.0, 41)) {
        CAPTURE(t);
        CHECK(std::abs(linear_velocity(apt, cache, kTilted, t)) / va0 >
              std::abs(linear_velocity(h, cache, kTilted, t)) / vh0);
    }
}

TEST_CASE("anti-PT rotation reverses") {
    BathIntegralCache cache(kBath);
    const QubitSpec apt = kFig6.with_class(SymmetryClass::AntiPTSymmetric);
    bool negative = false, positive = false;
    for (double t : uniform_grid(0.0, 5.0, 501)) {
        const double r = angular_velocity(apt, cache, t);
        negative = negative || r < 0.0;
        positive = positive || r > 0.0;
    }
    CHECK(negative);
    CHECK(positive);
}

TEST_CASE("trajectory parameter validation") {
    CHECK_THROWS_AS((TrajectoryParams{-0.1, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((TrajectoryParams{4.0, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((TrajectoryParams{1.0, NAN}.validate()), DomainError);
}
