#pragma once

#include <stdexcept>
#include <string>

namespace liefield {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live on spaces of different ambient dimension.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Coordinate or basis index outside the valid range.
struct IndexError : Error {
    using Error::Error;
};

/// A stated operation precondition does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

/// The torus substitution would leave the exponential-polynomial class.
struct SubstitutionError : Error {
    using Error::Error;
};

/// Numeric evaluation overflowed or produced a non-finite value.
struct EvalError : Error {
    using Error::Error;
};

/// A hard resource cap (closure dimension, basis size, variable count) was hit.
/// Deliberately distinct from any mathematical verdict.
struct ResourceExhausted : Error {
    using Error::Error;
};

/// Unknown or illegal simple type label, e.g. G5.
struct TypeError : Error {
    using Error::Error;
};

/// Expression syntax error with source position (1-based).
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& what, int line_, int col_)
        : Error(what + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

} // namespace liefield
