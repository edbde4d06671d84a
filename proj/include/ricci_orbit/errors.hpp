#pragma once

#include <stdexcept>
#include <string>

namespace ricci_orbit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// Malformed or out-of-contract input (bad JSON, unnormalized potential, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The requested form vanishes identically (pluriharmonic potential).
class NotAMetric : public Error {
 public:
  using Error::Error;
};

// No diastasis-normalized Ricci potential exists at the origin.
class NonPositiveAtOrigin : public Error {
 public:
  using Error::Error;
};

// Symbolic expressions grew past the configured coefficient budget.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ricci_orbit
