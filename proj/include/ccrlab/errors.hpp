#pragma once

#include <stdexcept>
#include <string>

namespace ccrlab {

// Base for every library error. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input failed a structural check (shape, Hermiticity, dimensions).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Scalar parameter outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Matrix expected to be positive semidefinite has a clearly negative eigenvalue.
class PositivityError : public DomainError {
public:
    using DomainError::DomainError;
};

// Bad user configuration: unknown scenario, duplicate assignment, missing mode.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Brute-force construction would exceed the dimension ceiling.
class SizeError : public Error {
public:
    using Error::Error;
};

}  // namespace ccrlab
