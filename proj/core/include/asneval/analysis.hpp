#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asneval/evaluation.hpp"
#include "asneval/model.hpp"

namespace asneval {

// The pass/fail record of the reference ("official") process for one
// candidate. Flags are the comparison target; the indicator values behind
// them are optional because the reference process rarely publishes them.
struct OfficialRecord {
    std::string candidate_id;
    Role role = Role::AssociateProfessor;
    EvaluationOutcome outcome;
    std::optional<IndicatorTriple> triple;
};

// One open-data evaluation of one candidate under one condition.
struct CandidateEvaluation {
    std::string candidate_id;
    Condition condition = Condition::CCV;
    IndicatorTriple triple;
    EvaluationOutcome outcome;
};

// Report rows, in the order the result tables use them.
enum class Metric { Overall, Journals, Citations, HIndex };

inline constexpr Metric kAllMetrics[] = {Metric::Overall, Metric::Journals, Metric::Citations,
                                         Metric::HIndex};

std::string_view metric_name(Metric m);

bool metric_flag(const EvaluationOutcome& outcome, Metric m);

// What to do when the open and official candidate sets differ. Strict raises
// UnmatchedCandidate naming the first offender; DropAndWarn restricts both
// sides to the intersection and reports how many were dropped.
enum class MatchPolicy {
    Strict,
    DropAndWarn,
};

// All three reports keep integer counts and derive percentages on demand:
// the agree/plus/minus buckets partition the cohort, so the percentage sum
// is exactly 100 in rational arithmetic, with no float accumulation in
// between.

class AgreementReport {
public:
    std::size_t cohort_size = 0;
    std::size_t dropped_open = 0;
    std::size_t dropped_official = 0;
    std::vector<Condition> conditions;
    std::vector<std::array<std::size_t, 4>> agree_counts;  // [condition][metric]

    std::size_t count(Condition c, Metric m) const;
    double pct(Condition c, Metric m) const;  // 100 * count / cohort_size
};

class FlipReport {
public:
    std::size_t cohort_size = 0;
    std::size_t dropped_open = 0;
    std::size_t dropped_official = 0;
    std::vector<Condition> conditions;
    std::vector<std::array<std::size_t, 4>> plus_counts;   // open pass, official fail
    std::vector<std::array<std::size_t, 4>> minus_counts;  // open fail, official pass

    std::size_t plus_count(Condition c, Metric m) const;
    std::size_t minus_count(Condition c, Metric m) const;
    double plus_pct(Condition c, Metric m) const;
    double minus_pct(Condition c, Metric m) const;
};

// Share of candidates whose open-data flag equals the official flag, per
// condition and metric. Every open evaluation must have an official record
// (module MatchPolicy); candidates must carry the same set of conditions.
AgreementReport agreement_table(const std::vector<CandidateEvaluation>& open,
                                const std::vector<OfficialRecord>& official,
                                MatchPolicy policy = MatchPolicy::Strict);

// Share of candidates flipping in each direction: '+' passed with open data
// but not officially, '-' the reverse.
FlipReport flip_table(const std::vector<CandidateEvaluation>& open,
                      const std::vector<OfficialRecord>& official,
                      MatchPolicy policy = MatchPolicy::Strict);

struct SweepSeries {
    std::vector<double> ratios;
    std::size_t cohort_size = 0;
    std::size_t dropped_open = 0;
    std::size_t dropped_official = 0;
    std::vector<ThresholdSet> scaled_thresholds;       // per ratio
    std::array<std::vector<double>, 4> agreement_pct;  // [metric][ratio index]

    double pct(Metric m, std::size_t ratio_index) const;
};

// Re-evaluates the open triples against base thresholds scaled by each ratio
// and recomputes agreement against the fixed official flags. Only the open
// side is rescaled; the official flags never move. One triple per candidate:
// the caller picks the condition being swept.
SweepSeries threshold_sweep(const std::vector<std::pair<std::string, IndicatorTriple>>& open_triples,
                            const std::vector<OfficialRecord>& official,
                            const ThresholdSet& base, const std::vector<double>& ratios,
                            ComparisonRule rule = ComparisonRule::GreaterEqual,
                            MatchPolicy policy = MatchPolicy::Strict);

struct RoleStats {
    std::size_t cv_count = 0;
    std::size_t dois_dblp = 0;
    std::size_t dois_cv = 0;
    std::size_t dois_union = 0;
    // Averages are 0 with averages_defined = false on an empty role.
    bool averages_defined = false;
    double avg_dblp = 0.0;
    double avg_cv = 0.0;
    double avg_union = 0.0;

    friend bool operator==(const RoleStats&, const RoleStats&) = default;
};

struct DatasetStats {
    RoleStats associate;
    RoleStats full;

    const RoleStats& for_role(Role role) const {
        return role == Role::AssociateProfessor ? associate : full;
    }

    friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

// Totals and per-candidate averages of the three DOI sets, by role.
DatasetStats dataset_stats(const std::vector<Candidate>& candidates);

}  // namespace asneval
