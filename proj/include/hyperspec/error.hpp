#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid hypergraph data or malformed input files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a connected hypergraph got a disconnected one.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

/// The Macaulay monomial basis would exceed the configured size cap.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : Error(what), requested_(requested), cap_(cap) {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

/// An exact identity that must hold by construction failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperspec
