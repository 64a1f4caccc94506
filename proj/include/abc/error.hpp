#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abc {

/// Input outside the documented domain of a function or builder.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graph would exceed the fixed vertex capacity, or an integer accumulator overflowed.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed graph6 text. `offset()` is the zero-based byte where decoding failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace abc
