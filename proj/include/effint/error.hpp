#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace effint {

// Base of every structured failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (bad polynomial text, bad orbifold tokens, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : InputError("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownVariable : public SyntaxError {
 public:
  UnknownVariable(std::size_t offset, char name)
      : SyntaxError(offset, std::string("unknown variable '") + name + "'") {}
};

class NegativeExponent : public SyntaxError {
 public:
  explicit NegativeExponent(std::size_t offset) : SyntaxError(offset, "negative exponent") {}
};

// Precondition violations on mathematical arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByZeroPoly : public DomainError {
 public:
  DivisionByZeroPoly() : DomainError("division by the zero polynomial") {}
};

class TargetTooSmall : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroPolynomial : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConstantInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegreeTooSmall : public DomainError {
 public:
  using DomainError::DomainError;
};

class KindMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoValidDecomposition : public DomainError {
 public:
  using DomainError::DomainError;
};

class PhiTooSmall : public DomainError {
 public:
  using DomainError::DomainError;
};

class GenusMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotBig : public DomainError {
 public:
  using DomainError::DomainError;
};

class PositiveDimensional : public DomainError {
 public:
  PositiveDimensional() : DomainError("ideal is not zero-dimensional") {}
};

// A configured computational ceiling was hit; the instance exceeds desk scale.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A computed value exceeds a bound the theory guarantees. Never expected.
class BoundViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace effint
