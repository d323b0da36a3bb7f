#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition (weight mismatch, bad literal).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a documented size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A denominator 1 - q^j (or similar) vanished.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Rational-mode and series-mode scalars met in one expression.
class ModeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hurwitz
