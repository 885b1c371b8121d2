#pragma once

#include <stdexcept>
#include <string>

namespace defdirac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// k^2 <= alpha_bar^2: the internal-variable eigenvalue turns imaginary.
struct SupercriticalCoupling : Error {
    using Error::Error;
};

// n = n_r + l* + 1 <= 0.
struct NonPositivePrincipal : Error {
    using Error::Error;
};

// operation needs nu > 0 (the coordinate map degenerates at nu = 0).
struct DeformationRequired : Error {
    using Error::Error;
};

struct ComplexRoots : Error {
    using Error::Error;
};

// nu = 0 spectrum requires a < e^2/(m c^2).
struct MassParameterTooLarge : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct InvalidGrid : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct BracketingFailure : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace defdirac
