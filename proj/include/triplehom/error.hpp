#pragma once

#include <stdexcept>
#include <string>

namespace triplehom {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed GC or trace text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (bad id, wrong
// component count, mismatched endpoints, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A move event does not apply to the diagram it was given.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

// Replay of a trace failed; `step` is the 0-based index of the offending event.
class ValidationError : public Error {
 public:
  ValidationError(int step, const std::string& reason)
      : Error("step " + std::to_string(step) + ": " + reason), step_(step), reason_(reason) {}

  int step() const noexcept { return step_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  int step_;
  std::string reason_;
};

}  // namespace triplehom
