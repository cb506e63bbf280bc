#pragma once

#include <stdexcept>
#include <string>

namespace pinchlab {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A point (or a finite-difference stencil point) left its chart domain.
struct DomainViolation : Error {
    using Error::Error;
};

// Coframe matrix not invertible at the requested point.
struct SingularFrame : Error {
    using Error::Error;
};

// Pre-symmetrization asymmetry of the curvature operator exceeded tolerance;
// signals a finite-difference failure upstream.
struct AsymmetryExceeded : Error {
    using Error::Error;
};

// A parameter that must be nonnegative (c, b, m^2, rho_tilde) was negative.
struct NegativeParameter : Error {
    using Error::Error;
};

// Evaluation requested at (or too close to) the singular boundary point p_inf.
struct PoleAtPInfinity : Error {
    using Error::Error;
};

// Plane basis handed to a sectional-curvature routine is not orthonormal.
struct NonOrthonormalPlane : Error {
    using Error::Error;
};

} // namespace pinchlab
