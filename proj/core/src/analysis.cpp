#include "asneval/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "asneval/errors.hpp"

namespace asneval {

std::string_view metric_name(Metric m) {
    switch (m) {
        case Metric::Overall: return "overall";
        case Metric::Journals: return "journals";
        case Metric::Citations: return "citations";
        case Metric::HIndex: return "h-index";
    }
    return "?";
}

bool metric_flag(const EvaluationOutcome& outcome, Metric m) {
    switch (m) {
        case Metric::Overall: return outcome.overall;
        case Metric::Journals: return outcome.pass_a;
        case Metric::Citations: return outcome.pass_b;
        case Metric::HIndex: return outcome.pass_c;
    }
    return false;
}

namespace {

constexpr std::size_t metric_index(Metric m) { return static_cast<std::size_t>(m); }

struct PairedCohort {
    std::size_t cohort_size = 0;
    std::size_t dropped_open = 0;
    std::size_t dropped_official = 0;
    std::vector<Condition> conditions;
    // [condition][candidate] -> (open outcome, official outcome)
    std::vector<std::vector<std::pair<EvaluationOutcome, EvaluationOutcome>>> pairs;
};

std::unordered_map<std::string, const OfficialRecord*> index_official(
    const std::vector<OfficialRecord>& official) {
    std::unordered_map<std::string, const OfficialRecord*> by_id;
    by_id.reserve(official.size());
    for (const OfficialRecord& rec : official) {
        if (!by_id.emplace(rec.candidate_id, &rec).second) {
            throw Error("duplicate official record for candidate '" + rec.candidate_id + "'");
        }
    }
    return by_id;
}

PairedCohort pair_outcomes(const std::vector<CandidateEvaluation>& open,
                           const std::vector<OfficialRecord>& official, MatchPolicy policy) {
    auto by_id = index_official(official);

    // id -> condition -> outcome, insertion order preserved for determinism
    std::vector<std::string> order;
    std::map<std::string, std::map<Condition, EvaluationOutcome>> evals;
    for (const CandidateEvaluation& e : open) {
        auto [it, fresh] = evals.try_emplace(e.candidate_id);
        if (fresh) order.push_back(e.candidate_id);
        if (!it->second.emplace(e.condition, e.outcome).second) {
            throw Error("duplicate evaluation for candidate '" + e.candidate_id +
                        "' under condition " + std::string(condition_name(e.condition)));
        }
    }

    PairedCohort cohort;

    std::set<Condition> condition_set;
    for (const auto& [id, by_condition] : evals) {
        for (const auto& [condition, _] : by_condition) condition_set.insert(condition);
    }
    for (Condition c : kAllConditions) {
        if (condition_set.contains(c)) cohort.conditions.push_back(c);
    }
    cohort.pairs.resize(cohort.conditions.size());

    std::set<std::string> matched;
    for (const std::string& id : order) {
        auto official_it = by_id.find(id);
        if (official_it == by_id.end()) {
            if (policy == MatchPolicy::Strict) {
                throw UnmatchedCandidate("candidate '" + id + "' has no official record");
            }
            ++cohort.dropped_open;
            continue;
        }
        const auto& by_condition = evals.at(id);
        if (by_condition.size() != cohort.conditions.size()) {
            throw Error("candidate '" + id + "' does not cover every condition in the input");
        }
        matched.insert(id);
        for (std::size_t ci = 0; ci < cohort.conditions.size(); ++ci) {
            cohort.pairs[ci].emplace_back(by_condition.at(cohort.conditions[ci]),
                                          official_it->second->outcome);
        }
        ++cohort.cohort_size;
    }

    for (const OfficialRecord& rec : official) {
        if (!matched.contains(rec.candidate_id)) {
            if (policy == MatchPolicy::Strict) {
                throw UnmatchedCandidate("official record '" + rec.candidate_id +
                                         "' has no open evaluation");
            }
            ++cohort.dropped_official;
        }
    }
    return cohort;
}

}  // namespace

std::size_t AgreementReport::count(Condition c, Metric m) const {
    for (std::size_t ci = 0; ci < conditions.size(); ++ci) {
        if (conditions[ci] == c) return agree_counts[ci][metric_index(m)];
    }
    throw Error("condition " + std::string(condition_name(c)) + " not present in report");
}

double AgreementReport::pct(Condition c, Metric m) const {
    if (cohort_size == 0) return 0.0;
    return 100.0 * static_cast<double>(count(c, m)) / static_cast<double>(cohort_size);
}

std::size_t FlipReport::plus_count(Condition c, Metric m) const {
    for (std::size_t ci = 0; ci < conditions.size(); ++ci) {
        if (conditions[ci] == c) return plus_counts[ci][metric_index(m)];
    }
    throw Error("condition " + std::string(condition_name(c)) + " not present in report");
}

std::size_t FlipReport::minus_count(Condition c, Metric m) const {
    for (std::size_t ci = 0; ci < conditions.size(); ++ci) {
        if (conditions[ci] == c) return minus_counts[ci][metric_index(m)];
    }
    throw Error("condition " + std::string(condition_name(c)) + " not present in report");
}

double FlipReport::plus_pct(Condition c, Metric m) const {
    if (cohort_size == 0) return 0.0;
    return 100.0 * static_cast<double>(plus_count(c, m)) / static_cast<double>(cohort_size);
}

double FlipReport::minus_pct(Condition c, Metric m) const {
    if (cohort_size == 0) return 0.0;
    return 100.0 * static_cast<double>(minus_count(c, m)) / static_cast<double>(cohort_size);
}

AgreementReport agreement_table(const std::vector<CandidateEvaluation>& open,
                                const std::vector<OfficialRecord>& official, MatchPolicy policy) {
    PairedCohort cohort = pair_outcomes(open, official, policy);

    AgreementReport report;
    report.cohort_size = cohort.cohort_size;
    report.dropped_open = cohort.dropped_open;
    report.dropped_official = cohort.dropped_official;
    report.conditions = cohort.conditions;
    report.agree_counts.assign(cohort.conditions.size(), {});

    for (std::size_t ci = 0; ci < cohort.conditions.size(); ++ci) {
        for (const auto& [open_outcome, official_outcome] : cohort.pairs[ci]) {
            for (Metric m : kAllMetrics) {
                if (metric_flag(open_outcome, m) == metric_flag(official_outcome, m)) {
                    ++report.agree_counts[ci][metric_index(m)];
                }
            }
        }
    }
    return report;
}

FlipReport flip_table(const std::vector<CandidateEvaluation>& open,
                      const std::vector<OfficialRecord>& official, MatchPolicy policy) {
    PairedCohort cohort = pair_outcomes(open, official, policy);

    FlipReport report;
    report.cohort_size = cohort.cohort_size;
    report.dropped_open = cohort.dropped_open;
    report.dropped_official = cohort.dropped_official;
    report.conditions = cohort.conditions;
    report.plus_counts.assign(cohort.conditions.size(), {});
    report.minus_counts.assign(cohort.conditions.size(), {});

    for (std::size_t ci = 0; ci < cohort.conditions.size(); ++ci) {
        for (const auto& [open_outcome, official_outcome] : cohort.pairs[ci]) {
            for (Metric m : kAllMetrics) {
                bool open_flag = metric_flag(open_outcome, m);
                bool official_flag = metric_flag(official_outcome, m);
                if (open_flag && !official_flag) ++report.plus_counts[ci][metric_index(m)];
                if (!open_flag && official_flag) ++report.minus_counts[ci][metric_index(m)];
            }
        }
    }
    return report;
}

double SweepSeries::pct(Metric m, std::size_t ratio_index) const {
    return agreement_pct[static_cast<std::size_t>(m)].at(ratio_index);
}

SweepSeries threshold_sweep(
    const std::vector<std::pair<std::string, IndicatorTriple>>& open_triples,
    const std::vector<OfficialRecord>& official, const ThresholdSet& base,
    const std::vector<double>& ratios, ComparisonRule rule, MatchPolicy policy) {
    if (ratios.empty()) throw InvalidRatio("ratio list must not be empty");

    auto by_id = index_official(official);

    std::vector<std::pair<IndicatorTriple, EvaluationOutcome>> matched;
    std::set<std::string> matched_ids;
    SweepSeries series;
    for (const auto& [id, triple] : open_triples) {
        if (!matched_ids.insert(id).second) {
            throw Error("duplicate open triple for candidate '" + id + "'");
        }
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            if (policy == MatchPolicy::Strict) {
                throw UnmatchedCandidate("candidate '" + id + "' has no official record");
            }
            ++series.dropped_open;
            continue;
        }
        matched.emplace_back(triple, it->second->outcome);
    }
    for (const OfficialRecord& rec : official) {
        if (!matched_ids.contains(rec.candidate_id)) {
            if (policy == MatchPolicy::Strict) {
                throw UnmatchedCandidate("official record '" + rec.candidate_id +
                                         "' has no open evaluation");
            }
            ++series.dropped_official;
        }
    }

    series.ratios = ratios;
    series.cohort_size = matched.size();
    for (auto& column : series.agreement_pct) column.reserve(ratios.size());

    for (double ratio : ratios) {
        ThresholdSet scaled = scale_thresholds(base, ratio);  // throws InvalidRatio
        series.scaled_thresholds.push_back(scaled);

        std::array<std::size_t, 4> agree{};
        for (const auto& [triple, official_outcome] : matched) {
            EvaluationOutcome open_outcome = evaluate(triple, scaled, rule);
            for (Metric m : kAllMetrics) {
                if (metric_flag(open_outcome, m) == metric_flag(official_outcome, m)) {
                    ++agree[metric_index(m)];
                }
            }
        }
        for (Metric m : kAllMetrics) {
            double pct = matched.empty() ? 0.0
                                         : 100.0 * static_cast<double>(agree[metric_index(m)]) /
                                               static_cast<double>(matched.size());
            series.agreement_pct[metric_index(m)].push_back(pct);
        }
    }
    return series;
}

DatasetStats dataset_stats(const std::vector<Candidate>& candidates) {
    DatasetStats stats;
    for (const Candidate& candidate : candidates) {
        RoleStats& row =
            candidate.role == Role::AssociateProfessor ? stats.associate : stats.full;
        ++row.cv_count;
        row.dois_cv += candidate.cv_dois.size();
        row.dois_dblp += candidate.dblp_dois.size();
        row.dois_union += build_condition_sets(candidate.cv_dois, candidate.dblp_dois).cu.size();
    }
    for (RoleStats* row : {&stats.associate, &stats.full}) {
        if (row->cv_count > 0) {
            row->averages_defined = true;
            auto n = static_cast<double>(row->cv_count);
            row->avg_cv = static_cast<double>(row->dois_cv) / n;
            row->avg_dblp = static_cast<double>(row->dois_dblp) / n;
            row->avg_union = static_cast<double>(row->dois_union) / n;
        }
    }
    return stats;
}

}  // namespace asneval
