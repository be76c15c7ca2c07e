#pragma once

#include <chrono>

namespace aorrtc {

/// Elapsed-seconds source. Injectable so that benchmark output can be made
/// bit-reproducible with a virtual clock.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual double now() = 0;
};

class SteadyClock final : public Clock {
 public:
  SteadyClock() : start_(std::chrono::steady_clock::now()) {}
  double now() override {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Deterministic clock: each query advances time by a fixed tick, so a run's
/// timeline depends only on the work performed, not on wall time.
class TickClock final : public Clock {
 public:
  explicit TickClock(double tick = 1e-5) : tick_(tick) {}
  double now() override {
    t_ += tick_;
    return t_;
  }

 private:
  double tick_;
  double t_ = 0.0;
};

}  // namespace aorrtc
