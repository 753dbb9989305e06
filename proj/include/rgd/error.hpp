#ifndef RGD_ERROR_HPP
#define RGD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rgd {

// Process exit codes used by the CLI: 2 for bad parameters, 3 for numeric or
// generation failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 3; }
};

class ParameterError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

// Input exceeds what an exact (exhaustive or dense) method supports.
class ScaleError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

// The base graph has a kernel direction the other graph does not share, so no
// finite approximation factor exists.
class NoFiniteEpsilonError : public NumericError {
public:
    using NumericError::NumericError;
};

class DecodeError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace rgd

#endif // RGD_ERROR_HPP
