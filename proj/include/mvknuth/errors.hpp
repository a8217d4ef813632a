#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvknuth {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands built over different alphabets {1..n}.
struct RankMismatch : Error {
  RankMismatch(int lhs, int rhs)
      : Error("rank mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A value violates the invariants of its type (letter out of range, column not increasing, ...).
struct InvalidValue : Error {
  using Error::Error;
};

/// Truncated Laurent arithmetic left its exponent window; retry with a larger window.
struct PrecisionError : Error {
  using Error::Error;
};

/// An enumeration would exceed the configured work budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Text input could not be parsed. `offset` is the byte offset of the offending character.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// A cross-check between two independent computations failed. Signals a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace mvknuth
