#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperslide {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (.cfg / .trace).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A caller broke an operation's precondition (absent module, wrong dimension, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Move witnesses do not have the shape of a rotation or slide.
class MalformedMoveError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// Size/dimension mismatch, or relocation of a lone module.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A guarantee of the construction did not hold. Never retried.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperslide
