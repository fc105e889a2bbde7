#pragma once

#include <stdexcept>
#include <string>

namespace modfun {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (parse errors, mismatched rings or fields,
/// invalid algebras and representations). CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded. CLI exit code 2.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (for example two independent
/// verdicts disagree). CLI exit code 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (zero polynomial where a
/// leading term is needed, field characteristic too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace modfun
