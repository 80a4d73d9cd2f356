#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "asneval/analysis.hpp"
#include "asneval/citation_index.hpp"
#include "asneval/evaluation.hpp"
#include "asneval/harvest/clients.hpp"
#include "asneval/indicators.hpp"
#include "asneval/model.hpp"

namespace asneval {

// Where incoming-citation counts come from: the bulk local index or the REST
// citation endpoint.
class CitationSource {
public:
    virtual ~CitationSource() = default;
    virtual std::unordered_map<Doi, int> counts_for(const std::set<Doi>& dois) = 0;
};

class IndexCitationSource final : public CitationSource {
public:
    explicit IndexCitationSource(const CitationIndex& index) : index_(index) {}
    std::unordered_map<Doi, int> counts_for(const std::set<Doi>& dois) override {
        return index_.citation_counts(dois);
    }

private:
    const CitationIndex& index_;
};

class RestCitationSource final : public CitationSource {
public:
    explicit RestCitationSource(CociClient& client) : client_(client) {}
    std::unordered_map<Doi, int> counts_for(const std::set<Doi>& dois) override;

private:
    CociClient& client_;
};

// Per-DOI publication metadata for venue classification. Lookup trouble
// degrades to "no answer" (tallied) instead of failing a whole cohort.
class MetadataSource {
public:
    virtual ~MetadataSource() = default;
    virtual std::optional<WorkMetadata> work(const Doi& doi) = 0;
};

class CrossrefMetadataSource final : public MetadataSource {
public:
    explicit CrossrefMetadataSource(CrossrefClient& client) : client_(client) {}
    std::optional<WorkMetadata> work(const Doi& doi) override;

    std::uint64_t lookup_failures() const noexcept { return failures_.load(); }

private:
    CrossrefClient& client_;
    std::atomic<std::uint64_t> failures_{0};
};

struct CitationSourceConfig {
    enum class Kind { RestIndex, LocalDump };

    Kind kind = Kind::LocalDump;
    std::filesystem::path dump_index_path;
};

struct HarvestSettings {
    std::filesystem::path cache_root = "cache";
    // Contact address for the polite user agent; live fetches are refused
    // while it is empty. Cache reads always work.
    std::string contact;
    std::size_t rate_limit_per_sec = 2;
    int max_retries = 3;
    std::size_t max_in_flight = 4;
    std::string dblp_base = "https://dblp.org";
    std::string crossref_base = "https://api.crossref.org";
    std::string doiproxy_base = "https://doi.org";
    std::string coci_base = "https://opencitations.net";

    std::string user_agent() const;
};

struct PipelineConfig {
    int reference_year = 2016;
    NormalizationStrategy normalization = NormalizationStrategy::none();
    std::map<Role, ThresholdSet> thresholds;
    ComparisonRule comparison = ComparisonRule::GreaterEqual;
    CitationSourceConfig citations;
    HarvestSettings harvest;
    std::size_t parallelism = 4;
};

// One candidate ready for evaluation: the domain record plus whatever
// publication metadata the DBLP harvest produced (empty when the DOI sets
// came from files).
struct CandidateInput {
    Candidate candidate;
    std::unordered_map<Doi, WorkMetadata> dblp_works;
};

struct EvaluationRow {
    std::string candidate_id;
    Role role = Role::AssociateProfessor;
    Condition condition = Condition::CCV;
    IndicatorTriple triple;
    EvaluationOutcome outcome;

    friend bool operator==(const EvaluationRow&, const EvaluationRow&) = default;
};

struct RunCounters {
    std::uint64_t publications_total = 0;
    std::uint64_t venue_unknown = 0;       // no source classified the work
    std::uint64_t age_from_first_pub = 0;  // roster supplied the year
    std::uint64_t age_from_min_year = 0;   // fell back to earliest metadata year
    std::uint64_t age_defaulted = 0;       // no year information at all

    friend bool operator==(const RunCounters&, const RunCounters&) = default;
};

struct CohortResult {
    std::vector<EvaluationRow> rows;  // sorted by candidate id, then condition
    DatasetStats stats;
    RunCounters counters;

    friend bool operator==(const CohortResult&, const CohortResult&) = default;
};

// Evaluates every candidate under all three conditions: per-condition DOI
// sets, citation counts from `citations`, venue classes from the DBLP labels
// plus `metadata` (nullable), scientific age from the roster year or the
// earliest known publication year. Candidates run in parallel up to
// config.parallelism; the result is canonically ordered regardless of
// scheduling.
CohortResult run_cohort(const std::vector<CandidateInput>& candidates,
                        const PipelineConfig& config, CitationSource& citations,
                        MetadataSource* metadata);

enum class ExportFormat { Csv, Json };

// Deterministic serialization; exporting the same result twice is
// byte-identical.
std::string export_results(const CohortResult& result, ExportFormat format);

CohortResult import_results_json(std::string_view json_text);

}  // namespace asneval
