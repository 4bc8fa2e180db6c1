#pragma once

#include <stdexcept>
#include <string>

namespace interlink
{

// Root of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Bad caller input. The CLI maps this family to exit status 2.
class ArgumentError : public Error
{
public:
    using Error::Error;
};

// Input is well-formed but outside the domain an operation supports.
class RangeError : public ArgumentError
{
public:
    using ArgumentError::ArgumentError;
};

// Request exceeds a deliberate size cap (factorial enumeration and the like).
class ResourceLimitError : public ArgumentError
{
public:
    using ArgumentError::ArgumentError;
};

// Floating-point evaluation went wrong. The CLI maps this family to exit status 3.
class NumericError : public Error
{
public:
    using Error::Error;
};

class ConvergenceError : public NumericError
{
public:
    using NumericError::NumericError;
};

class SimulationError : public NumericError
{
public:
    using NumericError::NumericError;
};

class IntegrationQualityError : public NumericError
{
public:
    using NumericError::NumericError;
};

} // namespace interlink
