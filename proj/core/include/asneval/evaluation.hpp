#pragma once

#include <set>

#include "asneval/model.hpp"

namespace asneval {

struct ConditionSets {
    std::set<Doi> ccv;
    std::set<Doi> cdblp;
    std::set<Doi> cu;  // union of the two, duplicates collapsed

    const std::set<Doi>& for_condition(Condition c) const {
        switch (c) {
            case Condition::CCV: return ccv;
            case Condition::CDBLP: return cdblp;
            case Condition::CU: return cu;
        }
        return cu;
    }
};

ConditionSets build_condition_sets(const std::set<Doi>& cv_dois, const std::set<Doi>& dblp_dois);

// How indicator values are compared against thresholds. The 2016 session's
// published material never states whether "exceed" was strict; inclusive is
// the reading consistent with the session's worked outcomes, so it is the
// default and the strict variant stays available as configuration.
enum class ComparisonRule {
    GreaterEqual,
    StrictlyGreater,
};

EvaluationOutcome evaluate(const IndicatorTriple& triple, const ThresholdSet& thresholds,
                           ComparisonRule rule = ComparisonRule::GreaterEqual);

// Rescales every threshold by `ratio` in (0, 1], rounding half up to the
// nearest integer. Throws InvalidRatio outside that range.
ThresholdSet scale_thresholds(const ThresholdSet& thresholds, double ratio);

}  // namespace asneval
