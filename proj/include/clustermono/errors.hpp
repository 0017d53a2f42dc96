#pragma once

#include <stdexcept>
#include <string>

namespace cmono {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch between operands (rank, degree, matrix size).
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (zero polynomial, zero evaluation
/// point, negative exponent, non-terminating series, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured bound was exceeded (node limit, dense-array cell guard).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Malformed text input (seed files, Laurent expressions).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Exact division left a nonzero remainder. The remainder is kept in its
/// canonical text form so that it can be reported.
class DivisionError : public Error {
public:
    DivisionError(const std::string& what, std::string remainder)
        : Error(what + " (remainder: " + remainder + ")"), remainder_(std::move(remainder)) {}

    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

}  // namespace cmono
