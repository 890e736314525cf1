#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkmin {

/// Argument outside an operation's domain (degree mismatch, index out of
/// range, element not in the required subset, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource bound (oracle degree, memo size) would be exceeded.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace gkmin
