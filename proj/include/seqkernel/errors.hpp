#pragma once

#include <stdexcept>
#include <string>

namespace seqkernel {

/// Binary series operation received operands of different truncation orders.
struct OrderMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Series with zero constant term where an invertible one is required.
struct ZeroConstantTermError : std::domain_error {
    using std::domain_error::domain_error;
};

/// LTT matrix with zero diagonal cannot be inverted.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Requested method cannot handle the given arguments (e.g. a fractional
/// exponent passed to the repeated-multiplication path).
struct UnsupportedMethodError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Result exists but is not an exact rational (irrational root of a0).
struct NotRepresentableError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Tower determinants are defined here only for unit-diagonal bases.
struct UnsupportedBaseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parameter combination that collapses the formula (e.g. D = 0 repetitions).
struct DegenerateCaseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument list has the wrong length.
struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Method/input combination outside a formula's stated domain
/// (e.g. an even-only expansion asked for an odd index).
struct UnsupportedInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact division by zero (e.g. the 1/x tower evaluated at x = 0).
struct DivisionByZeroError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace seqkernel
