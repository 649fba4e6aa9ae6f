#pragma once

#include <stdexcept>

namespace mop {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
};

/// Gamma requested at a non-positive integer argument.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Sum of GammaScaled values whose residual Gamma factors do not match.
class IncompatibleGammaError : public Error {
public:
    using Error::Error;
};

/// Hypergeometric series with no terminating numerator parameter.
class NonTerminatingError : public Error {
public:
    using Error::Error;
};

/// A denominator parameter hits a pole before the series terminates.
class DenominatorPoleError : public Error {
public:
    using Error::Error;
};

/// Weight system violating the AT admissibility conditions.
class ATSystemError : public Error {
public:
    using Error::Error;
};

/// Moment matrix is singular; the requested index is not normal.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

/// Magnitude exceeds the floating-point range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace mop
