#pragma once

#include <stdexcept>
#include <string>

namespace regraph {

/// Base class for all library errors. `token()` is a stable snake_case
/// identifier suitable for machine parsing of error output.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* token() const noexcept { return "error"; }
};

/// An argument violates a documented precondition.
class DomainError : public Error {
public:
    using Error::Error;
    const char* token() const noexcept override { return "domain_error"; }
};

/// The supplied bracket does not straddle the target value.
class NoSignChange : public Error {
public:
    using Error::Error;
    const char* token() const noexcept override { return "no_sign_change"; }
};

/// The function returned NaN or an infinity inside the bracket.
class NonFinite : public Error {
public:
    using Error::Error;
    const char* token() const noexcept override { return "non_finite"; }
};

/// The iteration cap was reached before both convergence criteria held.
class IterationLimit : public Error {
public:
    using Error::Error;
    const char* token() const noexcept override { return "iteration_limit"; }
};

/// The requested object provably does not exist (negative theorem claims).
class NotRepresentable : public Error {
public:
    using Error::Error;
    const char* token() const noexcept override { return "not_representable"; }
};

} // namespace regraph
