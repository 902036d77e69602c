#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polecat {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ill-graded diagram terms: stacking mismatched grades, summing terms of
/// different shape.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (open diagram passed to a
/// closed evaluator, letter outside the allowed alphabet, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Division by zero or evaluation at a pole of a rational function.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polecat
