#pragma once

#include <stdexcept>
#include <string>

namespace affect {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad command-line / API usage. CLI exit code 1.
struct UsageError : Error {
    using Error::Error;
};

// Data-level problems (files, formats, annotations). CLI exit code 2.
struct DataError : Error {
    using Error::Error;
};

struct ParseError : DataError {
    using DataError::DataError;
};

struct ValidationError : DataError {
    using DataError::DataError;
};

struct EmptyDatasetError : DataError {
    using DataError::DataError;
};

struct CoverageError : DataError {
    using DataError::DataError;
};

struct CompatibilityError : DataError {
    using DataError::DataError;
};

struct IntegrityError : DataError {
    using DataError::DataError;
};

struct ConfigError : DataError {
    using DataError::DataError;
};

struct IoError : DataError {
    using DataError::DataError;
};

// Caller violated an operation contract (shapes, ranges, preconditions).
struct ContractError : Error {
    using Error::Error;
};

struct ShapeError : ContractError {
    using ContractError::ContractError;
};

struct RangeError : ContractError {
    using ContractError::ContractError;
};

// Numeric failure (non-finite loss, failed gradient check). CLI exit code 3.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace affect
