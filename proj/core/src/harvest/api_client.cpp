#include "asneval/harvest/api_client.hpp"

#include <ctime>

#include "asneval/errors.hpp"

namespace asneval {

namespace {

std::string utc_timestamp() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class SemaphoreGuard {
public:
    explicit SemaphoreGuard(std::counting_semaphore<>& sem) : sem_(sem) { sem_.acquire(); }
    ~SemaphoreGuard() { sem_.release(); }
    SemaphoreGuard(const SemaphoreGuard&) = delete;
    SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;

private:
    std::counting_semaphore<>& sem_;
};

}  // namespace

ApiClient::ApiClient(EndpointConfig config, HttpTransport& transport, Clock& clock,
                     ResponseCache* cache, std::string user_agent)
    : config_(std::move(config)),
      transport_(transport),
      clock_(clock),
      cache_(cache),
      user_agent_(std::move(user_agent)),
      limiter_(config_.rate_limit_per_sec, std::chrono::seconds(1), clock),
      in_flight_(static_cast<std::ptrdiff_t>(std::max<std::size_t>(1, config_.max_in_flight))) {}

ClientStats ApiClient::stats() const {
    return ClientStats{requests_.load(), cache_hits_.load(), transient_failures_.load()};
}

FetchResult ApiClient::fetch(const std::string& path_and_query) {
    if (cache_) {
        if (auto hit = cache_->get(config_.name, path_and_query)) {
            cache_hits_.fetch_add(1);
            return FetchResult{hit->status, std::move(hit->body), true};
        }
    }
    if (user_agent_.empty()) {
        throw ConfigError("endpoint '" + config_.name +
                          "': a user agent with a contact address must be configured "
                          "before live requests");
    }

    SemaphoreGuard guard(in_flight_);
    const int attempts = config_.max_retries + 1;
    HttpResponse response;

    for (int attempt = 0;; ++attempt) {
        limiter_.acquire();
        requests_.fetch_add(1);

        bool transport_failed = false;
        std::string transport_detail;
        try {
            response = transport_.get(config_.base_url, path_and_query, user_agent_);
        } catch (const NetworkError& e) {
            transport_failed = true;
            transport_detail = e.what();
        }

        bool transient = transport_failed || response.status == 429 ||
                         (response.status >= 500 && response.status < 600);
        if (!transient) break;

        transient_failures_.fetch_add(1);
        if (attempt + 1 >= attempts) {
            if (transport_failed) {
                throw NetworkError("endpoint '" + config_.name + "': " + transport_detail +
                                   " (after " + std::to_string(attempts) + " attempts)");
            }
            throw EndpointError(response.status, "endpoint '" + config_.name +
                                                     "' still failing after " +
                                                     std::to_string(attempts) + " attempts");
        }
        clock_.sleep_for(config_.initial_backoff * (1LL << attempt));
    }

    if (cache_ && ((response.status >= 200 && response.status < 300) || response.status == 404)) {
        cache_->put(config_.name, path_and_query, response.status, response.body,
                    utc_timestamp());
    }
    return FetchResult{response.status, std::move(response.body), false};
}

}  // namespace asneval
