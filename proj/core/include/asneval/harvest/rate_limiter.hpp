#pragma once

#include <chrono>
#include <cstddef>
#include <deque>
#include <mutex>
#include <vector>

#include "asneval/harvest/clock.hpp"

namespace asneval {

// Sliding-window limiter shared by every concurrent caller of one endpoint:
// at most `max_per_window` acquisitions in any window of the given length.
class RateLimiter {
public:
    RateLimiter(std::size_t max_per_window, std::chrono::microseconds window, Clock& clock,
                bool keep_log = false);

    // Blocks (via the clock) until a slot is free, then records the dispatch.
    void acquire();

    // Every dispatch timestamp since construction; empty unless keep_log.
    std::vector<std::chrono::microseconds> dispatch_log() const;

private:
    std::size_t max_per_window_;
    std::chrono::microseconds window_;
    Clock& clock_;
    bool keep_log_;

    mutable std::mutex mutex_;
    std::deque<std::chrono::microseconds> recent_;
    std::vector<std::chrono::microseconds> log_;
};

}  // namespace asneval
