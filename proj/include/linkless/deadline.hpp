#pragma once

#include <chrono>
#include <cstdint>

#include "linkless/errors.hpp"

namespace linkless {

/// Cooperative per-task time limit. Engines poll it from their inner loops
/// and throw DeadlineExceeded once it has passed.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Deadline(Clock::time_point at) : at_(at) {}
  static Deadline after(std::chrono::duration<double> budget) {
    return Deadline(Clock::now() + std::chrono::duration_cast<Clock::duration>(budget));
  }

  bool expired() const { return Clock::now() >= at_; }

  /// Cheap polling: reads the clock on the first call and every 4096th after.
  void poll() const {
    if ((ticks_++ & 0xfffu) == 0 && expired()) throw DeadlineExceeded("per-graph time limit reached");
  }

 private:
  Clock::time_point at_;
  mutable std::uint32_t ticks_ = 0;
};

inline void poll(const Deadline* d) {
  if (d != nullptr) d->poll();
}

}  // namespace linkless
