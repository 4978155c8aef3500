#pragma once

#include <stdexcept>
#include <string>

namespace cwc {

// Structurally invalid input text: code files, cycle notation, bit strings.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation was asked to exceed one of its documented size caps
// (enumeration dimension, brute-force degree, closure size).
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cwc
