#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relic {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error with source position (1-based line/column).
struct ParseError : Error {
  ParseError(std::string msg, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

// Checked 64-bit arithmetic overflowed, or an evaluation-time invariant
// (unbound value variable, free family parameter) was violated.
struct EvalError : Error {
  using Error::Error;
};

// A bounded enumeration would exceed the configured state cap.
struct DomainCapError : Error {
  using Error::Error;
};

}  // namespace relic
