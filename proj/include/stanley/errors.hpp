#pragma once

#include <stdexcept>
#include <string>

namespace stanley {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands live in different ambient rings.
class AmbientMismatchError : public Error {
public:
  using Error::Error;
};

// A configured combinatorial bound would be exceeded.
class BoundError : public Error {
public:
  using Error::Error;
};

// Input violates a precondition (zero/unit ideal, bad index, ...).
class InvalidInputError : public Error {
public:
  using Error::Error;
};

// An inequality that must hold by construction failed to hold.
class DefectError : public Error {
public:
  using Error::Error;
};

// Document syntax error with a source position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace stanley
