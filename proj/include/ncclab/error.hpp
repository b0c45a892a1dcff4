#pragma once

#include <stdexcept>
#include <string>

namespace ncclab {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input to an operation: degree mismatch, non-normal subgroup,
// invalid action map, out-of-domain formula argument, ...
class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

// Element-table closure exceeded the configured cap.
class CapExceededError : public Error {
public:
  using Error::Error;
};

// Syntax error in a construction expression or a catalog file.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& msg, int line, int column) {
    return "parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }

  int line_;
  int column_;
};

}  // namespace ncclab
