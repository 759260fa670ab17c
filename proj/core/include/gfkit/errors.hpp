#pragma once

#include <stdexcept>
#include <string>

namespace gfkit {

// Every library failure derives from Error; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class TriangleError : public DomainError {
public:
    using DomainError::DomainError;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

class SingularError : public DomainError {
public:
    using DomainError::DomainError;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace gfkit
