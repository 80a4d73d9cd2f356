#pragma once

#include <memory>
#include <string>

namespace asneval {

struct HttpResponse {
    int status = 0;
    std::string body;
};

// One GET, no policy: retries, rate limiting and caching live in ApiClient.
// Implementations throw NetworkError for transport-level failures (refused,
// reset, timeout); any HTTP status is returned as data.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual HttpResponse get(const std::string& base_url, const std::string& path_and_query,
                             const std::string& user_agent) = 0;
};

// cpp-httplib implementation, TLS-enabled.
std::unique_ptr<HttpTransport> make_default_transport();

}  // namespace asneval
