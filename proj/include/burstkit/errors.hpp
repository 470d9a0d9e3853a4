#pragma once

#include <stdexcept>
#include <string>

namespace burstkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value lies outside the domain of a distribution, model or solver.
class DomainError : public Error {
public:
    using Error::Error;
};

/// No level sequence has a finite score.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// The instance is too large for the requested solver.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed input data (files, command-line values).
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace burstkit
