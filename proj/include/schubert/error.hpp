#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schubert {

// Inadmissible root-system type or option.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed type string or word. `position` is the 0-based offset of the
// offending character, or npos when the whole input is at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
};

// Enumeration would exceed the configured element budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (root not positive, mismatched
// groups, violated precondition).
class DomainError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schubert
