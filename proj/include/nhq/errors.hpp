// errors.hpp — exception hierarchy shared by all nhqubit modules

#pragma once

#include <stdexcept>
#include <string>

namespace nhq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The energy gap 2*omega0 vanishes or is imaginary (exceptional point or broken regime).
class DegenerateGap : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// Trace of the unnormalized non-Hermitian evolution underflowed.
class NormalizationCollapse : public Error {
public:
    using Error::Error;
};

/// Fock-space result is not converged in the cutoff.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Dyson map is numerically singular on the truncated space.
class ConditioningFailure : public Error {
public:
    using Error::Error;
};

/// A curve that must have a maximum is identically zero on its grid.
class EmptyCurve : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration; `field()` names the offending option.
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace nhq
