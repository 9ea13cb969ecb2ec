#pragma once

#include <stdexcept>
#include <string>

namespace ptosc {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on physical parameters or integer arguments failed.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Arguments lie outside the region where an approximation or formula applies.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative numerical procedure (quadrature, root finding, bisection) did not converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Requested problem size exceeds the configured maximum.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace ptosc
