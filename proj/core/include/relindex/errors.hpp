#pragma once

#include <stdexcept>
#include <string>

namespace relindex {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (NaN endpoint,
/// division by an interval containing zero, nonzero mass, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant of an operator or sequence does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// The approximate inverse or the tail of an operator cannot be built.
class OperatorBuildError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalue counting was inconclusive, or two certificates are incompatible.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration, seed file or certificate.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace relindex
