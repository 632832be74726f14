#pragma once

#include <stdexcept>
#include <string>

namespace tough {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction (self-loop, vertex id out of range, too many vertices).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list or graph6 input. `line()` is 1-based; 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An operation was called on a graph outside its domain (e.g. a complete graph
/// passed to the minimality test).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tough
