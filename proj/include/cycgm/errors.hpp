#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cycgm {

/// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VarTableMismatch : Error {
    using Error::Error;
};

struct ZeroDenominator : Error {
    using Error::Error;
};

/// A division that was required to be exact left a nonzero remainder.
struct InexactDivision : Error {
    using Error::Error;
};

/// Duplicate branch values, or a derivative direction that collides with them.
struct DistinctnessError : Error {
    using Error::Error;
};

/// Differentiation requested along a branch value that is not a symbolic parameter.
struct DirectionError : Error {
    using Error::Error;
};

/// A form has zeros that cannot be resolved by rational-root extraction.
struct UnresolvedZeros : Error {
    using Error::Error;
};

/// Stratum data requested for a form with poles.
struct NonHolomorphic : Error {
    using Error::Error;
};

/// Internal consistency failure: a divisor does not sum to 2g-2.
struct DegreeMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

}  // namespace cycgm
