#pragma once

#include <chrono>
#include <mutex>

namespace asneval {

// Time source for rate limiting and retry backoff. Injectable so tests can
// run the polite-harvesting logic in virtual time.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::chrono::microseconds now() = 0;
    virtual void sleep_for(std::chrono::microseconds d) = 0;
};

class SteadyClock final : public Clock {
public:
    std::chrono::microseconds now() override;
    void sleep_for(std::chrono::microseconds d) override;
};

// Virtual clock: sleeping advances shared time instantly. Threads sleeping
// "in parallel" serialize their advances, which is exactly what deterministic
// limiter tests need.
class ManualClock final : public Clock {
public:
    std::chrono::microseconds now() override;
    void sleep_for(std::chrono::microseconds d) override;
    void advance(std::chrono::microseconds d);

private:
    mutable std::mutex mutex_;
    std::chrono::microseconds now_{0};
};

}  // namespace asneval
