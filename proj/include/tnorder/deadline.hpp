#pragma once

#include "tnorder/errors.hpp"

#include <chrono>
#include <optional>

namespace tnorder {

// Wall-clock budget polled from inside long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = Clock::now() + budget;
    return d;
  }

  bool unlimited() const { return !at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }

  void check() const {
    if (expired()) throw TimeoutError("deadline exceeded");
  }

 private:
  std::optional<Clock::time_point> at_;
};

}  // namespace tnorder
