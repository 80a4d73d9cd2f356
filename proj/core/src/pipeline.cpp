#include "asneval/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "asneval/csv.hpp"
#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

std::unordered_map<Doi, int> RestCitationSource::counts_for(const std::set<Doi>& dois) {
    std::unordered_map<Doi, int> counts;
    counts.reserve(dois.size());
    for (const Doi& doi : dois) {
        counts[doi] = static_cast<int>(client_.citations(doi).size());
    }
    return counts;
}

std::optional<WorkMetadata> CrossrefMetadataSource::work(const Doi& doi) {
    try {
        return client_.work(doi);
    } catch (const NotFound&) {
        return std::nullopt;
    } catch (const NetworkError&) {
        ++failures_;
        return std::nullopt;
    } catch (const EndpointError&) {
        ++failures_;
        return std::nullopt;
    } catch (const ConfigError&) {
        // offline run without a contact address: treat as unavailable
        ++failures_;
        return std::nullopt;
    }
}

std::string HarvestSettings::user_agent() const {
    if (contact.empty()) return {};
    return "asneval/0.1 (mailto:" + contact + ")";
}

namespace {

struct CandidateRows {
    std::vector<EvaluationRow> rows;
    RunCounters counters;
};

CandidateRows evaluate_candidate(const CandidateInput& input, const PipelineConfig& config,
                                 CitationSource& citations, MetadataSource* metadata) {
    CandidateRows out;
    const Candidate& candidate = input.candidate;

    ConditionSets sets = build_condition_sets(candidate.cv_dois, candidate.dblp_dois);
    auto counts = citations.counts_for(sets.cu);

    std::vector<Publication> union_pubs;
    union_pubs.reserve(sets.cu.size());
    std::optional<int> min_year;
    for (const Doi& doi : sets.cu) {
        std::optional<std::string> dblp_kind;
        std::optional<int> dblp_year;
        if (auto it = input.dblp_works.find(doi); it != input.dblp_works.end()) {
            dblp_kind = it->second.type_label;
            dblp_year = it->second.year;
        }
        std::optional<std::string> crossref_type;
        std::optional<int> crossref_year;
        if (metadata) {
            if (auto meta = metadata->work(doi)) {
                if (!meta->type_label.empty()) crossref_type = meta->type_label;
                crossref_year = meta->year;
            }
        }

        Publication pub;
        pub.doi = doi;
        pub.venue_class = classify_publication(dblp_kind, crossref_type);
        pub.year = crossref_year ? crossref_year : dblp_year;
        if (candidate.cv_dois.contains(doi)) pub.sources.add(Source::CV);
        if (candidate.dblp_dois.contains(doi)) pub.sources.add(Source::DBLP);

        ++out.counters.publications_total;
        if (pub.venue_class == VenueClass::Unknown) ++out.counters.venue_unknown;
        if (pub.year && (!min_year || *pub.year < *min_year)) min_year = pub.year;
        union_pubs.push_back(std::move(pub));
    }

    ScientificAge age{1};
    if (candidate.first_pub_year) {
        age = scientific_age(*candidate.first_pub_year, config.reference_year);
        ++out.counters.age_from_first_pub;
    } else if (min_year) {
        // metadata can post-date the reference year; clamp to age 1
        age = scientific_age(std::min(*min_year, config.reference_year), config.reference_year);
        ++out.counters.age_from_min_year;
    } else {
        ++out.counters.age_defaulted;
    }

    const ThresholdSet& thresholds = config.thresholds.at(candidate.role);
    for (Condition condition : kAllConditions) {
        const std::set<Doi>& doi_set = sets.for_condition(condition);
        std::vector<Publication> pubs;
        pubs.reserve(doi_set.size());
        for (const Publication& pub : union_pubs) {
            if (doi_set.contains(pub.doi)) pubs.push_back(pub);
        }

        EvaluationRow row;
        row.candidate_id = candidate.id;
        row.role = candidate.role;
        row.condition = condition;
        row.triple = compute_indicators(pubs, counts, age, config.normalization);
        row.outcome = evaluate(row.triple, thresholds, config.comparison);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::string role_string(Role role) { return std::string(role_name(role)); }

std::string bool_string(bool b) { return b ? "1" : "0"; }

nlohmann::json role_stats_json(const RoleStats& stats) {
    return nlohmann::json{
        {"cv_count", stats.cv_count},         {"dois_dblp", stats.dois_dblp},
        {"dois_cv", stats.dois_cv},           {"dois_union", stats.dois_union},
        {"averages_defined", stats.averages_defined},
        {"avg_dblp", stats.avg_dblp},         {"avg_cv", stats.avg_cv},
        {"avg_union", stats.avg_union},
    };
}

RoleStats role_stats_from_json(const nlohmann::json& j) {
    RoleStats stats;
    stats.cv_count = j.at("cv_count").get<std::size_t>();
    stats.dois_dblp = j.at("dois_dblp").get<std::size_t>();
    stats.dois_cv = j.at("dois_cv").get<std::size_t>();
    stats.dois_union = j.at("dois_union").get<std::size_t>();
    stats.averages_defined = j.at("averages_defined").get<bool>();
    stats.avg_dblp = j.at("avg_dblp").get<double>();
    stats.avg_cv = j.at("avg_cv").get<double>();
    stats.avg_union = j.at("avg_union").get<double>();
    return stats;
}

}  // namespace

CohortResult run_cohort(const std::vector<CandidateInput>& candidates,
                        const PipelineConfig& config, CitationSource& citations,
                        MetadataSource* metadata) {
    if (candidates.empty()) throw EmptyCohort();

    std::set<std::string> ids;
    for (const CandidateInput& input : candidates) {
        if (!ids.insert(input.candidate.id).second) {
            throw Error("duplicate candidate id '" + input.candidate.id + "' in cohort");
        }
        if (!config.thresholds.contains(input.candidate.role)) {
            throw ConfigError("no thresholds configured for role '" +
                              role_string(input.candidate.role) + "' (candidate '" +
                              input.candidate.id + "')");
        }
    }

    std::vector<CandidateRows> per_candidate(candidates.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::string first_error_id;

    std::size_t worker_count = std::max<std::size_t>(1, config.parallelism);
    worker_count = std::min(worker_count, candidates.size());

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= candidates.size()) return;
            try {
                per_candidate[i] = evaluate_candidate(candidates[i], config, citations, metadata);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error || candidates[i].candidate.id < first_error_id) {
                    first_error = std::current_exception();
                    first_error_id = candidates[i].candidate.id;
                }
            }
        }
    };

    if (worker_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(worker_count);
        for (std::size_t t = 0; t < worker_count; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    if (first_error) {
        try {
            std::rethrow_exception(first_error);
        } catch (const ConfigError& e) {
            throw ConfigError("candidate '" + first_error_id + "': " + e.what());
        } catch (const Error& e) {
            throw Error("candidate '" + first_error_id + "': " + e.what());
        }
    }

    CohortResult result;
    std::vector<Candidate> cohort;
    cohort.reserve(candidates.size());
    for (const CandidateInput& input : candidates) cohort.push_back(input.candidate);
    result.stats = dataset_stats(cohort);

    for (const CandidateRows& rows : per_candidate) {
        result.counters.publications_total += rows.counters.publications_total;
        result.counters.venue_unknown += rows.counters.venue_unknown;
        result.counters.age_from_first_pub += rows.counters.age_from_first_pub;
        result.counters.age_from_min_year += rows.counters.age_from_min_year;
        result.counters.age_defaulted += rows.counters.age_defaulted;
        result.rows.insert(result.rows.end(), rows.rows.begin(), rows.rows.end());
    }

    std::sort(result.rows.begin(), result.rows.end(),
              [](const EvaluationRow& a, const EvaluationRow& b) {
                  if (a.candidate_id != b.candidate_id) return a.candidate_id < b.candidate_id;
                  return static_cast<int>(a.condition) < static_cast<int>(b.condition);
              });
    return result;
}

std::string export_results(const CohortResult& result, ExportFormat format) {
    if (format == ExportFormat::Csv) {
        std::ostringstream out;
        CsvWriter writer(out);
        writer.write_row(std::vector<std::string>{"candidate_id", "condition", "role", "a", "b",
                                                  "c", "pass_a", "pass_b", "pass_c", "overall"});
        for (const EvaluationRow& row : result.rows) {
            writer.write_row(std::vector<std::string>{
                row.candidate_id, std::string(condition_name(row.condition)),
                role_string(row.role), format_double(row.triple.a), format_double(row.triple.b),
                format_double(row.triple.c), bool_string(row.outcome.pass_a),
                bool_string(row.outcome.pass_b), bool_string(row.outcome.pass_c),
                bool_string(row.outcome.overall)});
        }
        return out.str();
    }

    nlohmann::json results = nlohmann::json::array();
    for (const EvaluationRow& row : result.rows) {
        results.push_back(nlohmann::json{
            {"candidate_id", row.candidate_id},
            {"condition", std::string(condition_name(row.condition))},
            {"role", role_string(row.role)},
            {"a", row.triple.a},
            {"b", row.triple.b},
            {"c", row.triple.c},
            {"pass_a", row.outcome.pass_a},
            {"pass_b", row.outcome.pass_b},
            {"pass_c", row.outcome.pass_c},
            {"overall", row.outcome.overall},
        });
    }
    nlohmann::json doc{
        {"results", results},
        {"stats",
         {{"associate", role_stats_json(result.stats.associate)},
          {"full", role_stats_json(result.stats.full)}}},
        {"counters",
         {{"publications_total", result.counters.publications_total},
          {"venue_unknown", result.counters.venue_unknown},
          {"age_from_first_pub", result.counters.age_from_first_pub},
          {"age_from_min_year", result.counters.age_from_min_year},
          {"age_defaulted", result.counters.age_defaulted}}},
    };
    return doc.dump(2) + "\n";
}

CohortResult import_results_json(std::string_view json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) throw Error("results JSON is unparseable");

    CohortResult result;
    for (const auto& item : doc.at("results")) {
        EvaluationRow row;
        row.candidate_id = item.at("candidate_id").get<std::string>();
        row.condition = parse_condition(item.at("condition").get<std::string>());
        row.role = parse_role(item.at("role").get<std::string>());
        row.triple = make_indicator_triple(item.at("a").get<double>(), item.at("b").get<double>(),
                                           item.at("c").get<double>());
        row.outcome = EvaluationOutcome::from_flags(item.at("pass_a").get<bool>(),
                                                    item.at("pass_b").get<bool>(),
                                                    item.at("pass_c").get<bool>());
        if (row.outcome.overall != item.at("overall").get<bool>()) {
            throw Error("results JSON: overall flag inconsistent for candidate '" +
                        row.candidate_id + "'");
        }
        result.rows.push_back(std::move(row));
    }
    const auto& stats = doc.at("stats");
    result.stats.associate = role_stats_from_json(stats.at("associate"));
    result.stats.full = role_stats_from_json(stats.at("full"));
    const auto& counters = doc.at("counters");
    result.counters.publications_total = counters.at("publications_total").get<std::uint64_t>();
    result.counters.venue_unknown = counters.at("venue_unknown").get<std::uint64_t>();
    result.counters.age_from_first_pub = counters.at("age_from_first_pub").get<std::uint64_t>();
    result.counters.age_from_min_year = counters.at("age_from_min_year").get<std::uint64_t>();
    result.counters.age_defaulted = counters.at("age_defaulted").get<std::uint64_t>();
    return result;
}

}  // namespace asneval
