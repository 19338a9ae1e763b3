#pragma once

#include <stdexcept>
#include <string>

namespace wildram {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different coefficient fields.
class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("operands belong to different fields") {}
};

/// A root needed by the computation does not exist in the coefficient field.
/// Enlarging the extension degree e usually fixes it.
class RootNotInField : public Error {
public:
    using Error::Error;
};

/// A result would depend on coefficients beyond the tracked precision.
class InsufficientPrecision : public Error {
public:
    using Error::Error;
};

/// Input violates a precondition (wrong shape, non-reduced, degenerate...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An internal identity that must hold did not. Always a bug or a false
/// mathematical premise, never a user error.
class AssertionFailure : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace wildram
