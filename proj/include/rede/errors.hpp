#pragma once

#include <stdexcept>

namespace rede {

// Exit-code contract: ValidationError (and subclasses) -> 1, anything else -> 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input bytes (JSON syntax, bad binary header, ...).
class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Broken internal invariant or numeric failure (non-finite loss, ...).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rede
