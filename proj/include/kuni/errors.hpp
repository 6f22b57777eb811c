#pragma once

#include <stdexcept>
#include <string>

namespace kuni {

// Bad parameters, malformed input, violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Operands from two different prime fields were combined.
class FieldMismatch : public InvalidInput {
 public:
  explicit FieldMismatch(const std::string& what) : InvalidInput(what) {}
};

// A requested enumeration or dense allocation exceeds a size guard.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kuni
