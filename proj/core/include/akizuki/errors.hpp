#pragma once

#include <stdexcept>
#include <string>

namespace akizuki {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical failures: non-units, exhausted precision, invalid instance data.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PrecisionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrecisionExhausted : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisibilityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidInstance : public DomainError {
 public:
  using DomainError::DomainError;
};

class InconsistentBlackbox : public DomainError {
 public:
  using DomainError::DomainError;
};

// Operands built over different coefficient fields were combined.
class FieldMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed textual input (literals, expressions, configuration files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace akizuki
