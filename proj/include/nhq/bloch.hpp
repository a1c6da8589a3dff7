// bloch.hpp — spin-vector trajectory and kinematics on the Bloch sphere
//
// S(t) = (sin t0 cos phi D, sin t0 sin phi D, cos t0),  phi(t) = phi0 - 2 w0 t + w0 Omt(t).
// "Clockwise" means decreasing phi seen from +z.

#pragma once

#include "nhq/bath_integrals.hpp"
#include "nhq/model.hpp"

namespace nhq {

struct BlochState {
    double sx{};
    double sy{};
    double sz{};
    double t{};
};

struct TrajectoryParams {
    double theta0{0.0};  // polar angle in [0, pi]
    double phi0{0.0};

    void validate() const;
};

BlochState spin_vector(const QubitSpec& q, const BathIntegralCache& bath, const TrajectoryParams& tp, double t);
BlochState spin_vector(const QubitSpec& q, const BathSpec& b, const TrajectoryParams& tp, double t);

double phase(const QubitSpec& q, const BathIntegralCache& bath, const TrajectoryParams& tp, double t);
double phase(const QubitSpec& q, const BathSpec& b, const TrajectoryParams& tp, double t);

/// Raw d phi / dt = -2 w0 + w0 d Omt/dt (counterclockwise positive).
double angular_velocity(const QubitSpec& q, const BathIntegralCache& bath, double t);
double angular_velocity(const QubitSpec& q, const BathSpec& b, double t);

/// Clockwise-positive rate scaled by the bare Larmor rate: -(d phi/dt) / (2 w0), equal to 1 at t = 0.
double normalized_angular_velocity(const QubitSpec& q, const BathIntegralCache& bath, double t);

/// d(t) = sin t0 D(t).
double axis_distance(const QubitSpec& q, const BathIntegralCache& bath, const TrajectoryParams& tp, double t);
double axis_distance(const QubitSpec& q, const BathSpec& b, const TrajectoryParams& tp, double t);

/// V_L(t) = d(t) d phi/dt.
double linear_velocity(const QubitSpec& q, const BathIntegralCache& bath, const TrajectoryParams& tp, double t);
double linear_velocity(const QubitSpec& q, const BathSpec& b, const TrajectoryParams& tp, double t);

}  // namespace nhq
