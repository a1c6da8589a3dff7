#include "nhq/bloch.hpp"

#include <cmath>
#include <numbers>

#include "nhq/dynamics.hpp"
#include "nhq/errors.hpp"

namespace nhq {

void TrajectoryParams::validate() const {
    if (!(theta0 >= 0.0 && theta0 <= std::numbers::pi)) throw DomainError("theta0 must lie in [0, pi]");
    if (!std::isfinite(phi0)) throw DomainError("phi0 must be finite");
}

double phase(const QubitSpec& q, const BathIntegralCache& bath, const TrajectoryParams& tp, double t) {
    tp.validate();
    const double w0 = omega0(q);
    return tp.phi0 - 2.0 * w0 * t + w0 * bath_phase(q, bath, t);
}

double phase(const QubitSpec& q, const BathSpec& b, const TrajectoryParams& tp, double t) {
    return phase(q, BathIntegralCache(b), tp, t);
}

BlochState spin_vector(const QubitSpec& q, const BathIntegralCache& bath, const TrajectoryParams& tp, double t) {
    const double phi = phase(q, bath, tp, t);
    const double d = std::sin(tp.theta0) * decoherence_function(q, bath, t);
    return {d * std::cos(phi), d * std::sin(phi), std::cos(tp.theta0), t};
}

BlochState spin_vector(const QubitSpec& q, const BathSpec& b, const TrajectoryParams& tp, double t) {
    return spin_vector(q, BathIntegralCache(b), tp, t);
}

double angular_velocity(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    const double w0 = omega0(q);
    return -2.0 * w0 + w0 * bath_phase_rate(q, bath, t);
}

double angular_velocity(const QubitSpec& q, const BathSpec& b, double t) {
    return angular_velocity(q, BathIntegralCache(b), t);
}

double normalized_angular_velocity(const QubitSpec& q, const BathIntegralCache& bath, double t) {
    return -angular_velocity(q, bath, t) / (2.0 * omega0(q));
}

double axis_distance(const QubitSpec& q, const BathIntegralCache& bath, const TrajectoryParams& tp, double t) {
    tp.validate();
    return std::sin(tp.theta0) * decoherence_function(q, bath, t);
}

double axis_distance(const QubitSpec& q, const BathSpec& b, const TrajectoryParams& tp, double t) {
    return axis_distance(q, BathIntegralCache(b), tp, t);
}

double linear_velocity(const QubitSpec& q, const BathIntegralCache& bath, const TrajectoryParams& tp, double t) {
    return axis_distance(q, bath, tp, t) * angular_velocity(q, bath, t);
}

double linear_velocity(const QubitSpec& q, const BathSpec& b, const TrajectoryParams& tp, double t) {
    return linear_velocity(q, BathIntegralCache(b), tp, t);
}

}  // namespace nhq
