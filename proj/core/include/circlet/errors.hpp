#pragma once

#include <stdexcept>
#include <string>

namespace circlet {

// Base of every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge with equal or out-of-range endpoints.
class InvalidEdgeError : public Error {
 public:
  using Error::Error;
};

// Circlet-specific operation on an n that is not divisible by 4.
class UnsupportedInstanceError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (wrong profile sum, bad k, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// Exhaustive work requested above the configured cap.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace circlet
