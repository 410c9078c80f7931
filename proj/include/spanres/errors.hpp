#pragma once

#include <stdexcept>
#include <string>

namespace spanres {

// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix or vector shapes do not fit the requested operation.
struct DimensionError : Error {
    using Error::Error;
};

// Linear system has no unique solution.
struct SingularSystemError : Error {
    using Error::Error;
};

// Argument lies outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Instance is too large for a guarded brute-force routine.
struct SizeError : Error {
    using Error::Error;
};

// Series/parallel reduction hit a fixpoint before reaching a single edge.
struct NotSeriesParallelError : Error {
    using Error::Error;
};

// Malformed text input (graph files, numbers, CLI arguments).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace spanres
