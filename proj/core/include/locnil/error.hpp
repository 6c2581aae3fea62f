#pragma once

#include <stdexcept>
#include <string>

namespace locnil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed (field descriptors, element and matrix literals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Integer factorization gave up before certifying a complete factorization.
class FactorizationExhausted : public Error {
 public:
  using Error::Error;
};

/// A closure enumeration did not terminate within its element budget.
class ClosureBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Inversion of a singular matrix was requested.
class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

}  // namespace locnil
