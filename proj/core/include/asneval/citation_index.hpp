#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "asneval/doi.hpp"

namespace asneval {

// Counters for one ingestion run. Every data row lands in exactly one bucket:
// rows_read = edges_kept + duplicates_dropped + self_loops_dropped +
// malformed_dropped.
struct IndexBuildReport {
    std::uint64_t rows_read = 0;
    std::uint64_t edges_kept = 0;
    std::uint64_t duplicates_dropped = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t malformed_dropped = 0;
    std::uint64_t distinct_dois = 0;

    friend bool operator==(const IndexBuildReport&, const IndexBuildReport&) = default;
};

// Column names of the citing/cited DOI pair; defaults match the public COCI
// CSV dumps.
struct CitationCsvColumns {
    std::string citing = "citing";
    std::string cited = "cited";
};

// Immutable incoming-citation index. DOIs are interned to dense ids in
// first-seen order; the adjacency payload stores, per cited id, the count of
// distinct citing ids followed by their ascending delta-encoded varints.
// Safe for any number of concurrent readers once built or loaded.
//
// On disk the index is a directory with two files (little-endian):
//   dois.tbl : magic "ASNVCIT1", u64 count, then per DOI u32 length + bytes
//   edges.adj: magic "ASNVCIA1", u64 count, u64 edges, u64 payload size,
//              (count+1) u64 payload offsets, payload bytes
class CitationIndex {
public:
    CitationIndex() = default;  // unloaded; every query throws IndexNotLoaded

    static CitationIndex load(const std::filesystem::path& dir);

    bool loaded() const noexcept { return loaded_; }

    // Number of distinct citing DOIs recorded for `doi`; 0 when unknown.
    int incoming_count(const Doi& doi) const;

    // Distinct citing DOIs in ascending intern order.
    std::vector<Doi> incoming_list(const Doi& doi) const;

    // Complete over the input set; unknown DOIs map to 0.
    std::unordered_map<Doi, int> citation_counts(const std::set<Doi>& dois) const;

    std::uint64_t distinct_dois() const;
    std::uint64_t edge_count() const;

private:
    friend class CitationIndexBuilder;

    void require_loaded() const;
    void build_lookup();
    std::optional<std::uint32_t> find(const Doi& doi) const;
    std::pair<std::uint64_t, const char*> entry(std::uint32_t id) const;  // count, cursor

    bool loaded_ = false;
    std::vector<std::string> dois_;                          // id -> DOI
    std::unordered_map<std::string_view, std::uint32_t> ids_;  // views into dois_
    std::vector<std::uint64_t> offsets_;                     // per id into payload_
    std::string payload_;
    std::uint64_t edges_ = 0;
};

// Single-writer ingestion of DOI-to-DOI citation CSV dumps. Rows are
// normalized, then dropped (and counted) when a DOI is malformed, the row is
// a self-loop, or the edge was already recorded. Multiple ingest_csv calls
// accumulate into one index.
class CitationIndexBuilder {
public:
    IndexBuildReport ingest_csv(std::istream& in, const CitationCsvColumns& columns = {});

    const IndexBuildReport& report() const noexcept { return report_; }

    // Persists the two index files into `dir` (created if needed).
    void save(const std::filesystem::path& dir) const;

    // Finalizes into a queryable in-memory index (identical answers to a
    // save/load round trip).
    CitationIndex build() const;

private:
    std::uint32_t intern(std::string doi);
    void encode(std::string& payload, std::vector<std::uint64_t>& offsets) const;

    std::deque<std::string> dois_;
    std::unordered_map<std::string_view, std::uint32_t> ids_;
    std::vector<std::vector<std::uint32_t>> incoming_;  // by cited id
    std::unordered_set<std::uint64_t> edge_keys_;
    IndexBuildReport report_;
};

}  // namespace asneval
