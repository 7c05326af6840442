#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace globrig {

/// Malformed textual input. `position()` is a byte offset for single-record
/// parsers and a 1-based line number for stream readers.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation was called on a graph outside its stated domain
/// (e.g. a family classifier on a graph that is not in the family).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace globrig
