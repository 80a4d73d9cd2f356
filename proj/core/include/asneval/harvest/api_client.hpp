#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <semaphore>
#include <string>

#include "asneval/harvest/cache.hpp"
#include "asneval/harvest/clock.hpp"
#include "asneval/harvest/rate_limiter.hpp"
#include "asneval/harvest/transport.hpp"

namespace asneval {

struct EndpointConfig {
    std::string name;      // cache subdirectory
    std::string base_url;  // e.g. "https://api.crossref.org"
    std::size_t rate_limit_per_sec = 2;
    int max_retries = 3;  // extra attempts after the first transient failure
    std::chrono::microseconds initial_backoff{std::chrono::seconds(1)};
    std::size_t max_in_flight = 4;
};

struct FetchResult {
    int status = 0;
    std::string body;
    bool from_cache = false;
};

struct ClientStats {
    std::uint64_t requests = 0;  // dispatched to the transport
    std::uint64_t cache_hits = 0;
    std::uint64_t transient_failures = 0;
};

// Cache-first GET with shared rate limiting, bounded in-flight requests and
// exponential-backoff retries for transient failures (transport errors, 429,
// 5xx). 2xx and 404 responses are cached; a transport failure that outlives
// the retry budget raises NetworkError, a still-failing status raises
// EndpointError. Safe for concurrent callers.
class ApiClient {
public:
    ApiClient(EndpointConfig config, HttpTransport& transport, Clock& clock,
              ResponseCache* cache, std::string user_agent);

    FetchResult fetch(const std::string& path_and_query);

    const EndpointConfig& config() const noexcept { return config_; }
    ClientStats stats() const;

private:
    EndpointConfig config_;
    HttpTransport& transport_;
    Clock& clock_;
    ResponseCache* cache_;
    std::string user_agent_;
    RateLimiter limiter_;
    std::counting_semaphore<> in_flight_;

    std::atomic<std::uint64_t> requests_{0};
    std::atomic<std::uint64_t> cache_hits_{0};
    std::atomic<std::uint64_t> transient_failures_{0};
};

}  // namespace asneval
