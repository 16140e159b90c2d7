#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gefstab {

// Base class for every error thrown by the library.  The CLI maps the
// subclasses onto exit codes: InputError -> 2, InternalError -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or semantically invalid user input.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public InputError {
 public:
  using InputError::InputError;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NotCausal : public InputError {
 public:
  using InputError::InputError;
};

class IllPosed : public Error {
 public:
  using Error::Error;
};

class NotStabilizable : public Error {
 public:
  using Error::Error;
};

// A library invariant was violated.  Never expected on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// No full-size minor of [A; B] lies outside Z.
class RepairImpossible : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace gefstab
