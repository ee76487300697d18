#pragma once

#include <stdexcept>
#include <string>

namespace zfort {

/// Malformed input: bad graph text, unknown family, parameter out of range.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured size or search cap would be exceeded.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace zfort
