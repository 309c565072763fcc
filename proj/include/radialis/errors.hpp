#pragma once

#include <stdexcept>
#include <string>

namespace radialis {

/// Argument outside the radial domain of a space or of an elementary function.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Structurally invalid input: bad catalog parameters, malformed samples, unknown ids.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Radius at or beyond the first conjugate point of a positive-curvature Jacobi solution.
struct ConjugatePointError : DomainError {
    using DomainError::DomainError;
};

/// |f'(r)| fell below threshold where a derivative had to be inverted.
struct CriticalPointError : std::runtime_error {
    CriticalPointError(const std::string& what, double r)
        : std::runtime_error(what), radius(r) {}
    double radius;
};

/// A numerical scheme stopped short of its target tolerance.
struct NumericalError : std::runtime_error {
    NumericalError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_tolerance(achieved) {}
    double achieved_tolerance;
};

}  // namespace radialis
