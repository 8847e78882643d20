#pragma once

#include <stdexcept>
#include <string>

namespace lpembed {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different fields or have incompatible dimensions.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, frame files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A search ran out of iterations before reaching its target.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace lpembed
