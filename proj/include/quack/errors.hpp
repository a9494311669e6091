#pragma once

#include <stdexcept>
#include <string>

namespace quack {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix/qubit dimensions between arguments.
struct DimensionError : Error {
  using Error::Error;
};

/// Constructor arguments outside the supported range (qubit counts, reps, ...).
struct InvalidSizeError : Error {
  using Error::Error;
};

/// Malformed text input; `line` is 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, int line_number)
      : Error(what + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
  int line;
};

/// Problem size exceeds a hard resource cap (e.g. dense diagonalization).
struct CapacityError : Error {
  using Error::Error;
};

/// Too few snapshots for the requested fit.
struct InsufficientDataError : Error {
  using Error::Error;
};

/// Solver failure or non-finite values where finite ones are required.
struct NumericalError : Error {
  using Error::Error;
};

/// Inconsistent run/experiment configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace quack
