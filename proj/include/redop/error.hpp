#pragma once

#include <stdexcept>
#include <string>

namespace redop {

// Base class for every failure the engine reports. Commands translate these
// into exit code 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Syntax error with a 1-based source position.
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

} // namespace redop
