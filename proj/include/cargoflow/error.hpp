#pragma once

#include <stdexcept>
#include <string>

namespace cargoflow {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad command-line usage or invalid configuration values. Exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input data cannot be processed (unreadable file, empty result,
/// infeasible generator target). Exit code 2.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A configured source column is missing from a file header, or a
/// config/target file is structurally malformed.
class SchemaError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace cargoflow
