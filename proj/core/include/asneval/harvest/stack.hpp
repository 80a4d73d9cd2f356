#pragma once

#include <memory>
#include <string>
#include <vector>

#include "asneval/harvest/api_client.hpp"
#include "asneval/harvest/clients.hpp"
#include "asneval/pipeline.hpp"

namespace asneval {

// Owns the whole client stack for the four endpoints: one transport, one
// shared cache, one rate-limited ApiClient per endpoint. An external
// transport/clock can be injected for tests; by default the stack uses real
// sockets and the steady clock.
class HarvestStack {
public:
    explicit HarvestStack(const HarvestSettings& settings, HttpTransport* transport = nullptr,
                          Clock* clock = nullptr);

    DblpClient& dblp() { return dblp_client_; }
    CrossrefClient& crossref() { return crossref_client_; }
    DoiProxyClient& doi_proxy() { return doi_proxy_client_; }
    CociClient& coci() { return coci_client_; }
    ResponseCache& cache() { return cache_; }

    struct EndpointStats {
        std::string name;
        ClientStats stats;
    };
    std::vector<EndpointStats> stats() const;

private:
    std::unique_ptr<HttpTransport> owned_transport_;
    std::unique_ptr<Clock> owned_clock_;
    HttpTransport* transport_;
    Clock* clock_;
    ResponseCache cache_;
    ApiClient dblp_api_;
    ApiClient crossref_api_;
    ApiClient doiproxy_api_;
    ApiClient coci_api_;
    DblpClient dblp_client_;
    CrossrefClient crossref_client_;
    DoiProxyClient doi_proxy_client_;
    CociClient coci_client_;
};

}  // namespace asneval
