#pragma once

#include <stdexcept>
#include <string>

namespace qcarpet {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// gcd(alpha, beta) != 1; the caller must reduce the fraction first.
class NonCoprimeError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

class NumericAccuracyError : public Error {
 public:
  using Error::Error;
};

// Mode truncation could not reach the requested tail tolerance.
class TruncationError : public NumericAccuracyError {
 public:
  using NumericAccuracyError::NumericAccuracyError;
};

// A mathematical identity the library relies on was violated at runtime.
class InternalConsistencyError : public NumericAccuracyError {
 public:
  using NumericAccuracyError::NumericAccuracyError;
};

class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& what, std::string path)
      : Error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace qcarpet
