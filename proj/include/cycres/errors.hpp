#pragma once

#include <stdexcept>
#include <string>

namespace cycres {

// Input that is well formed but violates a structural requirement.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TooSmallError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Raised when an operation needs an irreducible (strongly connected) instance.
class NotIrreducibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotStronglyConnectedError : public NotIrreducibleError {
 public:
  using NotIrreducibleError::NotIrreducibleError;
};

class ZeroElementError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Broken internal invariant; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cycres
