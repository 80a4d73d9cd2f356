#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "asneval/errors.hpp"
#include "asneval/harvest/transport.hpp"

namespace asneval {

namespace {

class HttplibTransport final : public HttpTransport {
public:
    HttpResponse get(const std::string& base_url, const std::string& path_and_query,
                     const std::string& user_agent) override {
        httplib::Client client(base_url);
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(30, 0);
        client.set_follow_location(true);
        client.set_default_headers({{"User-Agent", user_agent}});

        auto result = client.Get(path_and_query);
        if (!result) {
            throw NetworkError("GET " + base_url + path_and_query + " failed: " +
                               httplib::to_string(result.error()));
        }
        return HttpResponse{result->status, result->body};
    }
};

}  // namespace

std::unique_ptr<HttpTransport> make_default_transport() {
    return std::make_unique<HttplibTransport>();
}

}  // namespace asneval
