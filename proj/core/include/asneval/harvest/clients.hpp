#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asneval/harvest/api_client.hpp"
#include "asneval/model.hpp"

namespace asneval {

// Publication metadata as one source reports it. type_label keeps the
// source's own vocabulary: Crossref types like "journal-article", DBLP kinds
// encoded as "<tag>" or "<tag>/<publtype>" (e.g. "article/informal").
struct WorkMetadata {
    Doi doi;
    std::string type_label;
    std::optional<int> year;
    std::optional<std::string> venue;

    friend bool operator==(const WorkMetadata&, const WorkMetadata&) = default;
};

struct PersonMatch {
    std::string source_person_id;  // DBLP pid, e.g. "93/1234"
    std::string display_name;
    std::optional<std::string> orcid;
    double score = 0.0;  // 1.0 ORCID match, 0.9 exact name, 0.7 token set
};

struct ResolutionStatus {
    enum class Kind { Resolves, NotFound, TransientFailure };

    Kind kind = Kind::TransientFailure;
    std::string detail;

    static ResolutionStatus resolves() { return {Kind::Resolves, {}}; }
    static ResolutionStatus not_found() { return {Kind::NotFound, {}}; }
    static ResolutionStatus transient(std::string detail) {
        return {Kind::TransientFailure, std::move(detail)};
    }
};

// Name comparison used for DBLP disambiguation: 0.9 for an exact normalized
// match, 0.7 when the same tokens appear in any order, otherwise 0. DBLP
// homonym numbers ("0001") are ignored.
double name_match_score(std::string_view query, std::string_view candidate);

// Canonical ORCID form: strip resolver prefix, uppercase the checksum digit.
std::string normalize_orcid(std::string_view raw);

struct DblpPublicationList {
    std::vector<WorkMetadata> works;   // one entry per DOI-bearing publication
    std::size_t dropped_no_doi = 0;    // publications listed without a DOI
};

// Parsed person record (pid XML): the person's ORCID when published, plus
// the publication list. Exposed for fixture tests.
struct DblpPersonRecord {
    std::optional<std::string> orcid;
    DblpPublicationList publications;
};

DblpPersonRecord parse_dblp_person_xml(std::string_view xml);

class DblpClient {
public:
    explicit DblpClient(ApiClient& api) : api_(api) {}

    // Ranked person matches for a display name. When an ORCID is supplied,
    // the top candidates' person records are checked and an ORCID match
    // overrides the name score with 1.0.
    std::vector<PersonMatch> search_person(const std::string& name,
                                           const std::optional<std::string>& orcid = {});

    // Full publication list for a pid; entries without a DOI are dropped and
    // counted. Throws UnknownPerson for an id DBLP does not know.
    DblpPublicationList publications(const std::string& person_id);

private:
    DblpPersonRecord person_record(const std::string& person_id);

    ApiClient& api_;
};

class CrossrefClient {
public:
    explicit CrossrefClient(ApiClient& api) : api_(api) {}

    // Metadata for one DOI. Throws NotFound when the registry has no record.
    WorkMetadata work(const Doi& doi);

private:
    ApiClient& api_;
};

class DoiProxyClient {
public:
    explicit DoiProxyClient(ApiClient& api) : api_(api) {}

    // Existence check against the handle resolver. Network trouble is folded
    // into TransientFailure rather than thrown.
    ResolutionStatus resolve(const Doi& doi);

private:
    ApiClient& api_;
};

class CociClient {
public:
    explicit CociClient(ApiClient& api) : api_(api) {}

    // All recorded citations pointing at `cited`, deduplicated on the
    // (citing, cited) pair.
    std::vector<CitationEdge> citations(const Doi& cited);

private:
    ApiClient& api_;
};

}  // namespace asneval
