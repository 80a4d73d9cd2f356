#include <json.hpp>

#include <set>

#include "asneval/errors.hpp"
#include "asneval/harvest/clients.hpp"
#include "asneval/util.hpp"

namespace asneval {

std::vector<CitationEdge> CociClient::citations(const Doi& cited) {
    auto result = api_.fetch("/index/coci/api/v1/citations/" + encode_path_segments(cited.str()));
    if (result.status == 404) return {};
    if (result.status != 200) {
        throw EndpointError(result.status, "citation lookup for " + cited.str() + " failed");
    }

    nlohmann::json j = nlohmann::json::parse(result.body, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        throw EndpointError(result.status, "unparseable citations response for " + cited.str());
    }

    std::vector<CitationEdge> edges;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& item : j) {
        if (!item.is_object()) continue;
        try {
            CitationEdge edge;
            edge.citing = normalize_doi(item.value("citing", ""));
            edge.cited = normalize_doi(item.value("cited", ""));
            if (item.contains("creation") && item["creation"].is_string()) {
                std::string creation = item["creation"].get<std::string>();
                if (!creation.empty()) edge.creation = creation;
            }
            if (seen.emplace(edge.citing.str(), edge.cited.str()).second) {
                edges.push_back(std::move(edge));
            }
        } catch (const MalformedDoi&) {
            // rows with unusable DOIs are skipped
        }
    }
    return edges;
}

}  // namespace asneval
