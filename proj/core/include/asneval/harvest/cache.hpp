#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace asneval {

struct CachedResponse {
    int status = 0;
    std::string body;
    std::string fetched_at;  // ISO-8601 UTC, informational only
};

// Persistent response store laid out as
//   <root>/<endpoint>/<fingerprint>.body   raw response bytes
//   <root>/<endpoint>/<fingerprint>.meta   JSON sidecar: key, status, fetched_at
// where the fingerprint hashes (endpoint, normalized query). The sidecar
// stores the full key, so a hash collision reads as a miss instead of serving
// the wrong entry. Writers go through temp-file plus rename; concurrent
// readers are safe.
class ResponseCache {
public:
    explicit ResponseCache(std::filesystem::path root);

    std::optional<CachedResponse> get(const std::string& endpoint, const std::string& key) const;

    void put(const std::string& endpoint, const std::string& key, int status,
             std::string_view body, const std::string& fetched_at);

    const std::filesystem::path& root() const noexcept { return root_; }

private:
    std::filesystem::path entry_base(const std::string& endpoint, const std::string& key) const;

    std::filesystem::path root_;
};

}  // namespace asneval
