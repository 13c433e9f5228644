#pragma once

#include <stdexcept>
#include <string>

namespace conevol {

// Base class for everything this library throws. CLI and tests catch this
// one type; the subclasses exist so callers can tell input mistakes apart
// from violated preconditions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched vector/matrix shapes.
struct DimensionError : Error {
    using Error::Error;
};

// Input whose affine hull is lower-dimensional than required.
struct DegeneracyError : Error {
    using Error::Error;
};

// The origin is not an interior point, so the <a,x> <= 1 normalization
// does not exist; the caller has to translate first.
struct NormalizationError : Error {
    using Error::Error;
};

// Argument outside an operation's domain (zero direction vector, point
// outside the polytope, ...).
struct DomainError : Error {
    using Error::Error;
};

// A stated precondition does not hold (non-centered body without the
// override flag, diagnosis of a non-tight row, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// A hard resource cap was exceeded (atom count, lift depth).
struct CapError : Error {
    using Error::Error;
};

// Unknown canonical body name.
struct LookupError : Error {
    using Error::Error;
};

// Malformed rational literal or JSON document.
struct ParseError : Error {
    using Error::Error;
};

// The random generator exhausted its retry budget.
struct GenerationError : Error {
    using Error::Error;
};

} // namespace conevol
