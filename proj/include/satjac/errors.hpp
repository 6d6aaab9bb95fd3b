#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satjac {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. Carries a 0-based byte offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Operands live in different rings.
class RingMismatchError : public Error {
public:
    using Error::Error;
};

/// A precondition on arguments was violated (bad parameters, k not dividing d, ...).
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// The configured resource budget (S-pair count or degree cap) was exceeded.
class BudgetExceededError : public Error {
public:
    using Error::Error;
};

/// A mathematical hypothesis of the requested computation fails for the input
/// (non-homogeneous form, non-isolated singular locus, dimension mismatch).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Construction stayed degenerate after the configured number of reseeds.
class GenericityError : public Error {
public:
    using Error::Error;
};

/// Engine self-check failed; indicates a bug, never a property of the input.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace satjac
