#pragma once

#include <stdexcept>
#include <string>

namespace weave {

/// Caller violated an operation's precondition (mismatched rings, bad index, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input document or polynomial failed validation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Buchberger safety cap was hit; the computation was abandoned, not truncated.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weave
