#pragma once

#include <stdexcept>
#include <string>

namespace spin7 {

/// Parameters outside their documented domain (disc norms, bad space tags, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input sits at (or within eps of) a basepoint / cell boundary where an
/// inverse map degenerates.
struct BoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Iterative solver failed to converge.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural assumption failed mid-computation (e.g. factorization residue).
struct InconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shipped data is malformed or mutually inconsistent.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace spin7
