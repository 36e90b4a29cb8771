#pragma once

#include <stdexcept>
#include <string>

namespace supervir {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Session configuration problems: mismatched field parameter, invalid
/// index group, unsupported rank.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent user input (literals, files, mixed variants).
class InputError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A lookup or evaluation needed data outside the finite window it was
/// defined on.
class OutOfWindow : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant (should be unreachable on validated input).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace supervir
