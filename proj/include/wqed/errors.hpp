#pragma once

#include <stdexcept>
#include <string>

namespace wqed {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the physical domain of the operation.
class ParameterError : public Error {
public:
    using Error::Error;
};

// A linear solve, eigen-solve or propagation failed or lost accuracy.
class NumericalError : public Error {
public:
    using Error::Error;
};

// A truncated basis (charge cutoff, Fock space) is too small.
class TruncationError : public Error {
public:
    using Error::Error;
};

// The generator has more than one stationary state.
class AmbiguityError : public Error {
public:
    using Error::Error;
};

// Requested combination exists in the model but has no implementation here.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// A ratio is undefined because its denominator vanishes (e.g. zero photon flux).
class DivisionDomainError : public Error {
public:
    using Error::Error;
};

} // namespace wqed
