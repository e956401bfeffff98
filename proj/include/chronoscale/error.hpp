#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chronoscale {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input to a constructor (empty segment list, lo > hi, bad grid).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A point or interval lies outside the time scale / rectangle it was used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An oracle was called on inputs outside its specialization.
class MisuseError : public Error {
 public:
  using Error::Error;
};

/// Bad campaign / CLI configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature hit its depth limit before meeting the tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double estimate, double error_bound)
      : Error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

/// Expression syntax error; position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Expression evaluation produced a non-finite or undefined value.
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chronoscale
