#include <json.hpp>

#include "asneval/errors.hpp"
#include "asneval/harvest/clients.hpp"
#include "asneval/util.hpp"

namespace asneval {

WorkMetadata CrossrefClient::work(const Doi& doi) {
    auto result = api_.fetch("/works/" + encode_path_segments(doi.str()));
    if (result.status == 404) {
        throw NotFound("no metadata record for " + doi.str());
    }
    if (result.status != 200) {
        throw EndpointError(result.status, "works lookup for " + doi.str() + " failed");
    }

    nlohmann::json j = nlohmann::json::parse(result.body, nullptr, false);
    if (j.is_discarded() || !j.contains("message")) {
        throw EndpointError(result.status, "unparseable works response for " + doi.str());
    }
    const auto& message = j["message"];

    WorkMetadata meta;
    meta.doi = doi;
    if (message.contains("type") && message["type"].is_string()) {
        meta.type_label = message["type"].get<std::string>();
    }
    if (message.contains("issued") && message["issued"].contains("date-parts")) {
        const auto& parts = message["issued"]["date-parts"];
        if (parts.is_array() && !parts.empty() && parts[0].is_array() && !parts[0].empty() &&
            parts[0][0].is_number_integer()) {
            meta.year = parts[0][0].get<int>();
        }
    }
    if (message.contains("container-title")) {
        const auto& container = message["container-title"];
        if (container.is_array() && !container.empty() && container[0].is_string()) {
            meta.venue = container[0].get<std::string>();
        }
    }
    return meta;
}

}  // namespace asneval
