#include "asneval/harvest/clock.hpp"

#include <thread>

namespace asneval {

std::chrono::microseconds SteadyClock::now() {
    return std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now().time_since_epoch());
}

void SteadyClock::sleep_for(std::chrono::microseconds d) {
    if (d.count() > 0) std::this_thread::sleep_for(d);
}

std::chrono::microseconds ManualClock::now() {
    std::lock_guard lock(mutex_);
    return now_;
}

void ManualClock::sleep_for(std::chrono::microseconds d) {
    advance(d);
}

void ManualClock::advance(std::chrono::microseconds d) {
    if (d.count() <= 0) return;
    std::lock_guard lock(mutex_);
    now_ += d;
}

}  // namespace asneval
