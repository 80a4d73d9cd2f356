#include "asneval/citation_index.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>

#include "asneval/csv.hpp"
#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

namespace {

constexpr char kInternMagic[8] = {'A', 'S', 'N', 'V', 'C', 'I', 'T', '1'};
constexpr char kAdjMagic[8] = {'A', 'S', 'N', 'V', 'C', 'I', 'A', '1'};

void put_u32(std::string& out, std::uint32_t v) {
    char buf[4];
    std::memcpy(buf, &v, 4);
    out.append(buf, 4);
}

void put_u64(std::string& out, std::uint64_t v) {
    char buf[8];
    std::memcpy(buf, &v, 8);
    out.append(buf, 8);
}

void put_varint(std::string& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

class ByteCursor {
public:
    ByteCursor(const std::string& data, std::string name)
        : data_(data.data()), size_(data.size()), name_(std::move(name)) {}

    void expect_magic(const char (&magic)[8]) {
        if (size_ - pos_ < 8 || std::memcmp(data_ + pos_, magic, 8) != 0) {
            throw IoError(name_ + ": bad magic header (not a citation index file?)");
        }
        pos_ += 8;
    }

    std::uint32_t u32() {
        std::uint32_t v;
        take(&v, 4);
        return v;
    }

    std::uint64_t u64() {
        std::uint64_t v;
        take(&v, 8);
        return v;
    }

    std::string bytes(std::size_t n) {
        need(n);
        std::string out(data_ + pos_, n);
        pos_ += n;
        return out;
    }

    bool done() const { return pos_ == size_; }

private:
    void need(std::size_t n) {
        if (size_ - pos_ < n) throw IoError(name_ + ": truncated index file");
    }
    void take(void* dst, std::size_t n) {
        need(n);
        std::memcpy(dst, data_ + pos_, n);
        pos_ += n;
    }

    const char* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
    std::string name_;
};

std::uint64_t read_varint(const char*& cursor, const char* end) {
    std::uint64_t v = 0;
    int shift = 0;
    while (cursor < end) {
        std::uint8_t byte = static_cast<std::uint8_t>(*cursor++);
        v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
        if ((byte & 0x80) == 0) return v;
        shift += 7;
        if (shift > 63) break;
    }
    throw IoError("corrupt varint in adjacency payload");
}

}  // namespace

// ---------------------------------------------------------------------------
// Builder

std::uint32_t CitationIndexBuilder::intern(std::string doi) {
    auto it = ids_.find(std::string_view(doi));
    if (it != ids_.end()) return it->second;
    dois_.push_back(std::move(doi));  // deque: stable addresses for the views
    auto id = static_cast<std::uint32_t>(dois_.size() - 1);
    ids_.emplace(std::string_view(dois_.back()), id);
    return id;
}

IndexBuildReport CitationIndexBuilder::ingest_csv(std::istream& in,
                                                  const CitationCsvColumns& columns) {
    CsvReader reader(in);
    std::vector<std::string> row;

    if (!reader.next_row(row)) {
        throw MissingColumn(columns.citing);
    }

    std::size_t citing_idx = row.size();
    std::size_t cited_idx = row.size();
    for (std::size_t i = 0; i < row.size(); ++i) {
        std::string name(trim(row[i]));
        if (name == columns.citing) citing_idx = i;
        if (name == columns.cited) cited_idx = i;
    }
    if (citing_idx == row.size()) throw MissingColumn(columns.citing);
    if (cited_idx == row.size()) throw MissingColumn(columns.cited);

    while (reader.next_row(row)) {
        ++report_.rows_read;

        if (row.size() <= std::max(citing_idx, cited_idx)) {
            throw CsvSyntaxError(reader.row_line(),
                                 "row has " + std::to_string(row.size()) + " fields");
        }

        std::string citing_str;
        std::string cited_str;
        try {
            citing_str = normalize_doi(row[citing_idx]).str();
            cited_str = normalize_doi(row[cited_idx]).str();
        } catch (const MalformedDoi&) {
            ++report_.malformed_dropped;
            continue;
        }

        std::uint32_t citing = intern(std::move(citing_str));
        std::uint32_t cited = intern(std::move(cited_str));

        if (citing == cited) {
            ++report_.self_loops_dropped;
            continue;
        }
        std::uint64_t key = (static_cast<std::uint64_t>(citing) << 32) | cited;
        if (!edge_keys_.insert(key).second) {
            ++report_.duplicates_dropped;
            continue;
        }
        if (incoming_.size() <= cited) incoming_.resize(cited + 1);
        incoming_[cited].push_back(citing);
        ++report_.edges_kept;
    }
    if (in.bad()) throw IoError("stream error while reading citation CSV");

    report_.distinct_dois = dois_.size();
    return report_;
}

void CitationIndexBuilder::encode(std::string& payload,
                                  std::vector<std::uint64_t>& offsets) const {
    offsets.clear();
    offsets.reserve(dois_.size() + 1);
    payload.clear();

    std::vector<std::uint32_t> sorted;
    for (std::size_t id = 0; id < dois_.size(); ++id) {
        offsets.push_back(payload.size());
        if (id < incoming_.size() && !incoming_[id].empty()) {
            sorted = incoming_[id];
            std::sort(sorted.begin(), sorted.end());
            put_varint(payload, sorted.size());
            std::uint32_t prev = 0;
            bool first = true;
            for (std::uint32_t citing : sorted) {
                put_varint(payload, first ? citing : citing - prev);
                prev = citing;
                first = false;
            }
        } else {
            put_varint(payload, 0);
        }
    }
    offsets.push_back(payload.size());
}

void CitationIndexBuilder::save(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);

    std::string intern_blob(kInternMagic, 8);
    put_u64(intern_blob, dois_.size());
    for (const std::string& doi : dois_) {
        put_u32(intern_blob, static_cast<std::uint32_t>(doi.size()));
        intern_blob += doi;
    }
    atomic_write_file(dir / "dois.tbl", intern_blob);

    std::string payload;
    std::vector<std::uint64_t> offsets;
    encode(payload, offsets);

    std::string adj_blob(kAdjMagic, 8);
    put_u64(adj_blob, dois_.size());
    put_u64(adj_blob, report_.edges_kept);
    put_u64(adj_blob, payload.size());
    for (std::uint64_t off : offsets) put_u64(adj_blob, off);
    adj_blob += payload;
    atomic_write_file(dir / "edges.adj", adj_blob);
}

CitationIndex CitationIndexBuilder::build() const {
    CitationIndex index;
    index.dois_.assign(dois_.begin(), dois_.end());
    encode(index.payload_, index.offsets_);
    index.edges_ = report_.edges_kept;
    index.build_lookup();
    index.loaded_ = true;
    return index;
}

// ---------------------------------------------------------------------------
// Queryable index

CitationIndex CitationIndex::load(const std::filesystem::path& dir) {
    CitationIndex index;

    std::string intern_blob = read_file(dir / "dois.tbl");
    ByteCursor intern(intern_blob, (dir / "dois.tbl").string());
    intern.expect_magic(kInternMagic);
    std::uint64_t count = intern.u64();
    index.dois_.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        std::uint32_t len = intern.u32();
        index.dois_.push_back(intern.bytes(len));
    }
    if (!intern.done()) throw IoError("trailing bytes in " + (dir / "dois.tbl").string());

    std::string adj_blob = read_file(dir / "edges.adj");
    ByteCursor adj(adj_blob, (dir / "edges.adj").string());
    adj.expect_magic(kAdjMagic);
    std::uint64_t adj_count = adj.u64();
    if (adj_count != count) {
        throw IoError("index files disagree on DOI count (" + std::to_string(count) + " vs " +
                      std::to_string(adj_count) + ")");
    }
    index.edges_ = adj.u64();
    std::uint64_t payload_size = adj.u64();
    index.offsets_.reserve(count + 1);
    for (std::uint64_t i = 0; i <= count; ++i) index.offsets_.push_back(adj.u64());
    index.payload_ = adj.bytes(payload_size);
    if (!adj.done()) throw IoError("trailing bytes in " + (dir / "edges.adj").string());
    if (!index.offsets_.empty() && index.offsets_.back() != payload_size) {
        throw IoError("adjacency offsets inconsistent with payload size");
    }

    index.build_lookup();
    index.loaded_ = true;
    return index;
}

void CitationIndex::build_lookup() {
    ids_.clear();
    ids_.reserve(dois_.size());
    for (std::size_t id = 0; id < dois_.size(); ++id) {
        ids_.emplace(std::string_view(dois_[id]), static_cast<std::uint32_t>(id));
    }
}

void CitationIndex::require_loaded() const {
    if (!loaded_) throw IndexNotLoaded();
}

std::optional<std::uint32_t> CitationIndex::find(const Doi& doi) const {
    auto it = ids_.find(std::string_view(doi.str()));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

std::pair<std::uint64_t, const char*> CitationIndex::entry(std::uint32_t id) const {
    const char* cursor = payload_.data() + offsets_[id];
    const char* end = payload_.data() + offsets_[id + 1];
    std::uint64_t n = read_varint(cursor, end);
    return {n, cursor};
}

int CitationIndex::incoming_count(const Doi& doi) const {
    require_loaded();
    auto id = find(doi);
    if (!id) return 0;
    return static_cast<int>(entry(*id).first);
}

std::vector<Doi> CitationIndex::incoming_list(const Doi& doi) const {
    require_loaded();
    std::vector<Doi> out;
    auto id = find(doi);
    if (!id) return out;

    auto [n, cursor] = entry(*id);
    const char* end = payload_.data() + offsets_[*id + 1];
    out.reserve(n);
    std::uint64_t current = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t delta = read_varint(cursor, end);
        current = (i == 0) ? delta : current + delta;
        out.push_back(Doi::from_normalized(dois_.at(current)));
    }
    return out;
}

std::unordered_map<Doi, int> CitationIndex::citation_counts(const std::set<Doi>& dois) const {
    require_loaded();
    std::unordered_map<Doi, int> counts;
    counts.reserve(dois.size());
    for (const Doi& doi : dois) counts[doi] = incoming_count(doi);
    return counts;
}

std::uint64_t CitationIndex::distinct_dois() const {
    require_loaded();
    return dois_.size();
}

std::uint64_t CitationIndex::edge_count() const {
    require_loaded();
    return edges_;
}

}  // namespace asneval
