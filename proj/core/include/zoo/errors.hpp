#pragma once

#include <stdexcept>
#include <string>

namespace zoo {

// Root of every error the toolkit raises. `exit_code()` is what the CLI
// returns when the error escapes an entry run.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const noexcept { return 1; }
};

class ArgumentError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 2; }
};

class DomainError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class RangeError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class BoundaryError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class ParamError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class UnknownEntry : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class ConfigError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

class ResourceError : public Error {
 public:
  using Error::Error;
  int exit_code() const noexcept override { return 3; }
};

class TermCapExceeded : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class ConvergenceError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class ToleranceNotMet : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace zoo
