#pragma once

#include <stdexcept>
#include <string>

namespace latcode {

// Base class for everything this library throws on bad input or an
// internal arithmetic inconsistency.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Shape/size mismatch between operands (non-square matrix, length mismatch, ...).
struct DimensionError : Error {
    using Error::Error;
};

// Vertex matrix of a simplex is singular.
struct DegeneracyError : Error {
    using Error::Error;
};

// A quantity that must be an integer is not (non-integral height, odd-weight
// codeword feeding a half-integral construction, ...).
struct IntegralityError : Error {
    using Error::Error;
};

// A set claimed to be a group is not closed under its operation.
struct ClosureError : Error {
    using Error::Error;
};

// An element does not have the shape an operation requires
// (e.g. a height-1 element whose support is not a half-half pair).
struct ShapeError : Error {
    using Error::Error;
};

// Argument outside the supported range (enumeration caps).
struct RangeError : Error {
    using Error::Error;
};

// Point-enumeration budget exhausted.
struct BudgetError : Error {
    using Error::Error;
};

// Malformed input text; carries a 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Two computation routes that must agree did not, or a derived set
// contradicts its defining constraints.
struct ConsistencyError : Error {
    using Error::Error;
};

// An operation's mathematical precondition failed at runtime
// (e.g. no unique top element, zero or several interior points).
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace latcode
