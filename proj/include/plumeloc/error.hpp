#pragma once

#include <stdexcept>
#include <string>

namespace plumeloc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a type invariant (bad polygon, nonpositive constant, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A function argument lies outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The encounter-rate model is undefined for the given parameters (lambda <= a).
class ModelValidityError : public Error {
 public:
  using Error::Error;
};

/// A well-formed configuration that cannot be used, e.g. an empty prior support.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling ran out of budget.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Every importance weight is zero.
class DegeneratePosteriorError : public Error {
 public:
  using Error::Error;
};

/// Bad command-line usage or unusable input (e.g. an empty readings file).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace plumeloc
