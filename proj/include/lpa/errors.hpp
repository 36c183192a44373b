#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

/// Malformed graph, element, ideal or algebra text. `position` is a byte
/// offset (or line number for line-oriented formats), -1 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long position = -1)
      : std::runtime_error(what), position_(position) {}
  long position() const { return position_; }

 private:
  long position_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked internal invariant failed (associativity, relation check, ...).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lpa
