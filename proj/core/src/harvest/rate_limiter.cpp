#include "asneval/harvest/rate_limiter.hpp"

#include <algorithm>

namespace asneval {

RateLimiter::RateLimiter(std::size_t max_per_window, std::chrono::microseconds window,
                         Clock& clock, bool keep_log)
    : max_per_window_(std::max<std::size_t>(1, max_per_window)),
      window_(window),
      clock_(clock),
      keep_log_(keep_log) {}

void RateLimiter::acquire() {
    for (;;) {
        std::chrono::microseconds wait{0};
        {
            std::lock_guard lock(mutex_);
            auto now = clock_.now();
            while (!recent_.empty() && recent_.front() + window_ <= now) recent_.pop_front();
            if (recent_.size() < max_per_window_) {
                recent_.push_back(now);
                if (keep_log_) log_.push_back(now);
                return;
            }
            wait = recent_.front() + window_ - now;
        }
        clock_.sleep_for(std::max(wait, std::chrono::microseconds{1}));
    }
}

std::vector<std::chrono::microseconds> RateLimiter::dispatch_log() const {
    std::lock_guard lock(mutex_);
    return log_;
}

}  // namespace asneval
