#ifndef TPHS_ERRORS_HPP
#define TPHS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tphs {

/// Base class for every error raised by the engine.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact division by zero (rational or Gaussian-rational).
struct DivideByZeroError : Error {
  DivideByZeroError() : Error("division by zero") {}
};

/// A computation would exceed the configured filtration-degree cap.
/// Exceeding the cap is an error, never a silent truncation.
struct DegreeCapError : Error {
  explicit DegreeCapError(std::size_t requested, std::size_t cap)
      : Error("degree cap exceeded: needed " + std::to_string(requested) +
              ", cap " + std::to_string(cap)),
        requested(requested), cap(cap) {}
  std::size_t requested;
  std::size_t cap;
};

/// Relation-DSL syntax error with source position.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Requested (space, n) combination is not supported.
struct UnsupportedSpaceError : Error {
  explicit UnsupportedSpaceError(const std::string& what) : Error(what) {}
};

/// Anything else that indicates an internal invariant was violated
/// (mis-tagged basis element, non-integral twist exponent, ...).
struct InvariantError : Error {
  explicit InvariantError(const std::string& what) : Error(what) {}
};

}  // namespace tphs

#endif  // TPHS_ERRORS_HPP
