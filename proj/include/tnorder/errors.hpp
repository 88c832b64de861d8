#pragma once

#include <stdexcept>
#include <string>

namespace tnorder {

// Malformed input or an input that breaks a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is valid but larger than an exponential algorithm accepts.
class SizeBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by cooperative deadline checks.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tnorder
