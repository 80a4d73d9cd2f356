#include "asneval/evaluation.hpp"

#include <algorithm>
#include <cmath>

#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

ConditionSets build_condition_sets(const std::set<Doi>& cv_dois, const std::set<Doi>& dblp_dois) {
    ConditionSets sets;
    sets.ccv = cv_dois;
    sets.cdblp = dblp_dois;
    sets.cu = cv_dois;
    sets.cu.insert(dblp_dois.begin(), dblp_dois.end());
    return sets;
}

EvaluationOutcome evaluate(const IndicatorTriple& triple, const ThresholdSet& thresholds,
                           ComparisonRule rule) {
    auto passes = [rule](double value, unsigned threshold) {
        double t = static_cast<double>(threshold);
        return rule == ComparisonRule::GreaterEqual ? value >= t : value > t;
    };
    return EvaluationOutcome::from_flags(passes(triple.a, thresholds.t_a),
                                         passes(triple.b, thresholds.t_b),
                                         passes(triple.c, thresholds.t_c));
}

ThresholdSet scale_thresholds(const ThresholdSet& thresholds, double ratio) {
    if (!(ratio > 0.0) || ratio > 1.0 || !std::isfinite(ratio)) {
        throw InvalidRatio("threshold ratio must lie in (0, 1], got " + format_double(ratio));
    }
    auto scaled = [ratio](unsigned t) {
        return static_cast<unsigned>(std::floor(static_cast<double>(t) * ratio + 0.5));
    };
    return ThresholdSet{thresholds.role, scaled(thresholds.t_a), scaled(thresholds.t_b),
                        scaled(thresholds.t_c)};
}

}  // namespace asneval
