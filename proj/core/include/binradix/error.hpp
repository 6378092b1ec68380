#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binradix {

// Malformed text input. `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input that violates a mathematical precondition
// (inadmissible pair, null pair, decimal outside the address space, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace binradix
