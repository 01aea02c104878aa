#pragma once

#include <stdexcept>
#include <string>

namespace wedge {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic mixed scalars of distinct characteristic (or distinct primes).
class CharacteristicMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Inverse requested for a symbolic scalar that is not a nonzero constant.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An operation would introduce the unit into a nonunitary algebra.
class UnitInNonunitary : public Error {
 public:
  using Error::Error;
};

class TruncationMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class MissingAssignment : public Error {
 public:
  using Error::Error;
};

/// Candidate fails the membership conditions for an M family.
class NotInM : public Error {
 public:
  using Error::Error;
};

class NotInMPrime : public Error {
 public:
  using Error::Error;
};

/// A combinatorial enumeration exceeded its configured budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class TypeMismatch : public Error {
 public:
  using Error::Error;
};

/// Two normal-form terms are not related by the term order.
class Incomparable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace wedge
