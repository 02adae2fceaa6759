#pragma once

#include <stdexcept>
#include <string>

namespace ghal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape or algebra mismatch between arguments.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A mathematical certificate could not be produced, e.g. because the
/// declared Gorenstein dimension is too small for the input.
class CertificateError : public Error {
public:
    using Error::Error;
};

/// Two independent computations disagree. Never expected; signals a bug or
/// an input that violates an assumption the caller vouched for.
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ghal
