#pragma once

#include <stdexcept>
#include <string>

namespace macdel {

// Violated mathematical precondition (division by zero, index out of range,
// basis element not representable, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Syntax error with a position in the source text.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Internal consistency failure (closure violation, singular joint system).
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace macdel
