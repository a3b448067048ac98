#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two elements from different FiniteGroup instances were combined.
struct ParentMismatchError : Error {
  using Error::Error;
};

// An enumeration would exceed the configured tuple budget.
struct BudgetError : Error {
  using Error::Error;
};

// A construction would exceed the configured group-order cap.
struct OrderCapError : Error {
  using Error::Error;
};

struct WordParseError : Error {
  WordParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}
  std::size_t position;
};

// Bad argument: missing variable binding, non-central quotient kernel,
// element id out of range, m = 0 where a commutator slot is required, ...
struct InvalidArgumentError : Error {
  using Error::Error;
};

// A check's mathematical precondition does not hold for the given inputs,
// so the check neither passes nor fails.
struct InapplicableError : Error {
  using Error::Error;
};

// Malformed group definition file or spec string.
struct FileFormatError : Error {
  using Error::Error;
};

}  // namespace cgt
