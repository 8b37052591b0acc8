#pragma once

#include <stdexcept>
#include <string>

namespace bgfd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dimension or axis inconsistency between operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Invalid hyperparameter or argument value (eps <= 0, sigma < 0, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// API misuse (backward on a non-scalar, requires_grad on a non-leaf, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

// Non-finite values where finite ones are required.
class NumericError : public Error {
public:
    using Error::Error;
};

// Input data fails a content contract (non-binary mask values, bad ranges).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Dataset on disk is inconsistent (missing counterpart files).
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Invalid or inconsistent configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace bgfd
