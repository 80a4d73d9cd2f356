#include "asneval/harvest/cache.hpp"

#include <json.hpp>

#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

ResponseCache::ResponseCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path ResponseCache::entry_base(const std::string& endpoint,
                                                const std::string& key) const {
    return root_ / endpoint / fnv1a64_hex(key);
}

std::optional<CachedResponse> ResponseCache::get(const std::string& endpoint,
                                                 const std::string& key) const {
    auto base = entry_base(endpoint, key);
    auto meta_path = base;
    meta_path += ".meta";
    if (!std::filesystem::exists(meta_path)) return std::nullopt;

    try {
        auto meta = nlohmann::json::parse(read_file(meta_path));
        if (meta.value("key", "") != key) return std::nullopt;  // fingerprint collision
        auto body_path = base;
        body_path += ".body";
        CachedResponse entry;
        entry.status = meta.value("status", 0);
        entry.fetched_at = meta.value("fetched_at", "");
        entry.body = read_file(body_path);
        return entry;
    } catch (const std::exception&) {
        return std::nullopt;  // damaged entry counts as a miss
    }
}

void ResponseCache::put(const std::string& endpoint, const std::string& key, int status,
                        std::string_view body, const std::string& fetched_at) {
    auto base = entry_base(endpoint, key);
    auto body_path = base;
    body_path += ".body";
    auto meta_path = base;
    meta_path += ".meta";

    nlohmann::json meta = {
        {"key", key},
        {"status", status},
        {"fetched_at", fetched_at},
    };
    // Body first: a reader that sees the sidecar must find the payload.
    atomic_write_file(body_path, body);
    atomic_write_file(meta_path, meta.dump(2) + "\n");
}

}  // namespace asneval
