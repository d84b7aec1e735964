#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "regclosure/errors.hpp"

namespace regclosure {

/// Cooperative wall-clock budget. Long loops call poll(); once the budget is
/// spent poll() throws TimeoutError. A default-constructed Deadline never fires.
class Deadline {
public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget) : end_(Clock::now() + budget) {}

  void poll() const {
    if (!end_)
      return;
    // Reading the clock every call is measurable in the box loops.
    if ((++counter_ & 0x3F) != 0)
      return;
    if (Clock::now() > *end_)
      throw TimeoutError("wall-clock budget exhausted");
  }

  [[nodiscard]] bool expired() const { return end_ && Clock::now() > *end_; }

private:
  std::optional<Clock::time_point> end_;
  mutable std::uint32_t counter_ = 0;
};

} // namespace regclosure
