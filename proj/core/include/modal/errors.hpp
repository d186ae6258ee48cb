#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modal {

/// Raised by the formula and model parsers; `offset` is a byte offset into
/// the input text.
class parse_error : public std::runtime_error {
public:
  parse_error(std::string message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Raised when an enumeration guard trips. This signals a resource limit,
/// not a logical verdict; `module` names the component whose cap was hit.
class resource_limit_error : public std::runtime_error {
public:
  resource_limit_error(std::string module, std::string detail)
      : std::runtime_error(module + ": " + detail), module_(std::move(module)) {}

  const std::string& module() const { return module_; }

private:
  std::string module_;
};

}  // namespace modal
