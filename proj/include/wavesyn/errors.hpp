#pragma once

#include <stdexcept>
#include <string>

namespace wavesyn {

// Bad input shape or parameter combination.
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Instance would exceed a configured size guard (grid cap, oracle limits).
struct ResourceGuardError : std::runtime_error {
  explicit ResourceGuardError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wavesyn
