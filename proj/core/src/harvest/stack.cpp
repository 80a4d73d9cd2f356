#include "asneval/harvest/stack.hpp"

namespace asneval {

namespace {

EndpointConfig endpoint(const HarvestSettings& settings, std::string name, std::string base) {
    EndpointConfig config;
    config.name = std::move(name);
    config.base_url = std::move(base);
    config.rate_limit_per_sec = settings.rate_limit_per_sec;
    config.max_retries = settings.max_retries;
    config.max_in_flight = settings.max_in_flight;
    return config;
}

}  // namespace

HarvestStack::HarvestStack(const HarvestSettings& settings, HttpTransport* transport,
                           Clock* clock)
    : owned_transport_(transport ? nullptr : make_default_transport()),
      owned_clock_(clock ? nullptr : std::make_unique<SteadyClock>()),
      transport_(transport ? transport : owned_transport_.get()),
      clock_(clock ? clock : owned_clock_.get()),
      cache_(settings.cache_root),
      dblp_api_(endpoint(settings, "dblp", settings.dblp_base), *transport_, *clock_, &cache_,
                settings.user_agent()),
      crossref_api_(endpoint(settings, "crossref", settings.crossref_base), *transport_, *clock_,
                    &cache_, settings.user_agent()),
      doiproxy_api_(endpoint(settings, "doiproxy", settings.doiproxy_base), *transport_, *clock_,
                    &cache_, settings.user_agent()),
      coci_api_(endpoint(settings, "coci", settings.coci_base), *transport_, *clock_, &cache_,
                settings.user_agent()),
      dblp_client_(dblp_api_),
      crossref_client_(crossref_api_),
      doi_proxy_client_(doiproxy_api_),
      coci_client_(coci_api_) {}

std::vector<HarvestStack::EndpointStats> HarvestStack::stats() const {
    return {
        {"dblp", dblp_api_.stats()},
        {"crossref", crossref_api_.stats()},
        {"doiproxy", doiproxy_api_.stats()},
        {"coci", coci_api_.stats()},
    };
}

}  // namespace asneval
