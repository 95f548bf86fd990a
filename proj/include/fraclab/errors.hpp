#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

/// Base class for all toolkit errors; name() is the stable identifier printed
/// on diagnostic streams.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* name() const { return "Error"; }
};

/// Malformed user input: expression text, config files, flag values. CLI exit code 2.
struct UsageError : Error {
    using Error::Error;
    const char* name() const override { return "UsageError"; }
};

/// Mathematically invalid request for otherwise well-formed input. CLI exit code 3.
struct DomainError : Error {
    using Error::Error;
    const char* name() const override { return "DomainError"; }
};

/// A numerical run produced non-finite or out-of-bounds values. CLI exit code 4.
struct DivergenceError : Error {
    using Error::Error;
    const char* name() const override { return "DivergenceError"; }
};

struct ParseError : UsageError {
    using UsageError::UsageError;
    const char* name() const override { return "ParseError"; }
};

struct ConfigError : UsageError {
    using UsageError::UsageError;
    const char* name() const override { return "ConfigError"; }
};

/// Gamma evaluated at (or within tolerance of) a nonpositive integer.
struct PoleError : DomainError {
    using DomainError::DomainError;
    const char* name() const override { return "PoleError"; }
};

/// Caputo derivative requested for a t-exponent in (-1, 0) in strict mode.
struct StrictModeError : DomainError {
    using DomainError::DomainError;
    const char* name() const override { return "StrictModeError"; }
};

/// Fractional integral/derivative of t^b with b <= -1 does not converge.
struct DivergentError : DomainError {
    using DomainError::DomainError;
    const char* name() const override { return "DivergentError"; }
};

/// Real power of a nonpositive monomial coefficient.
struct NegativeBaseError : DomainError {
    using DomainError::DomainError;
    const char* name() const override { return "NegativeBaseError"; }
};

/// The similarity-constant equation has no positive real root.
struct NoRealSolutionError : DomainError {
    using DomainError::DomainError;
    const char* name() const override { return "NoRealSolutionError"; }
};

/// A generator lacks the coefficient a reduction needs (e.g. f1 = 0 for a t-scaling form).
struct DegenerateError : DomainError {
    using DomainError::DomainError;
    const char* name() const override { return "DegenerateError"; }
};

struct NonUniformGridError : DomainError {
    using DomainError::DomainError;
    const char* name() const override { return "NonUniformGridError"; }
};

}  // namespace fraclab
