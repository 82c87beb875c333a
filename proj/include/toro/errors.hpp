#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace toro {

/// Base class for all numeric-domain failures raised by the library.
///
/// Every singularity (cusp, flat point, vanishing torsion, torus boundary)
/// is reported through one of the subclasses below instead of letting NaN
/// propagate through downstream formulas.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}

    /// Parameter value at which the failure occurred, NaN when unknown.
    double param() const noexcept { return param_; }

    void set_param(double t) noexcept { param_ = t; }

private:
    double param_ = std::nan("");
};

/// sqrt of a non-positive value part, or division by a jet whose value
/// part is zero.
class JetDomainError : public Error {
public:
    using Error::Error;
};

/// Base point lies outside the open annulus (a-b)^2 < x^2+y^2 < (a+b)^2.
/// Carries the height residual b^2 - (a-rho)^2 at the offending point.
class TorusDomainError : public Error {
public:
    TorusDomainError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Curve fails the regularity requirement: the speed dropped below the
/// guard, typically at or near a cusp.
class RegularityError : public Error {
public:
    using Error::Error;
};

/// kappa is numerically zero: the Frenet frame is undefined.
class FlatnessError : public Error {
public:
    using Error::Error;
};

/// tau is numerically zero: the focal curvature c2 is undefined.
class TorsionZeroError : public Error {
public:
    using Error::Error;
};

/// Parameter outside the curve's domain, or an invalid configuration
/// value (bad torus radii, malformed expression, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace toro
