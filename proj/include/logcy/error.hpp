#pragma once

#include <stdexcept>
#include <string>

namespace logcy {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (coordinates, documents).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A value outside the domain of an operation, e.g. zero where C^x is required.
class DomainError : public Error {
public:
  using Error::Error;
};

/// PicVector used in a lattice it does not belong to.
class BasisMismatch : public Error {
public:
  using Error::Error;
};

/// Outcome of a validation pass: ok, or the first failure found.
struct Diagnostic {
  bool ok = true;
  std::string message;

  static Diagnostic success() { return {}; }
  static Diagnostic failure(std::string msg) { return {false, std::move(msg)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace logcy
