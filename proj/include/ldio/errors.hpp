// Error types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace ldio {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic preconditions: inverse of zero, gcd(0,0), divisor count of 0,
// membership test of the zero vector.
struct ZeroInputError : Error {
    using Error::Error;
};

// A Laurent-series operation would need coefficients beyond the known window.
struct PrecisionError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured cell budget.
struct BudgetError : Error {
    using Error::Error;
};

// Tabulated psi evaluated outside its range, or a negative height exponent.
struct RangeError : Error {
    using Error::Error;
};

// floor-to-V of a non-positive real.
struct DomainError : Error {
    using Error::Error;
};

// Exact integer/rational arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

// Malformed textual input (polynomials, fractions, psi specs, CLI values).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace ldio
