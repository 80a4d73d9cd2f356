#include <doctest.h>

#include <random>

#include "asneval/analysis.hpp"
#include "asneval/errors.hpp"
#include "asneval/report.hpp"

using namespace asneval;

namespace {

CandidateEvaluation eval(const std::string& id, Condition c, bool pa, bool pb, bool pc) {
    CandidateEvaluation e;
    e.candidate_id = id;
    e.condition = c;
    e.outcome = EvaluationOutcome::from_flags(pa, pb, pc);
    return e;
}

OfficialRecord rec(const std::string& id, bool pa, bool pb, bool pc) {
    OfficialRecord r;
    r.candidate_id = id;
    r.role = Role::FullProfessor;
    r.outcome = EvaluationOutcome::from_flags(pa, pb, pc);
    return r;
}

// Random cohort under all three conditions, plus its official counterpart.
struct RandomCohort {
    std::vector<CandidateEvaluation> open;
    std::vector<OfficialRecord> official;
};

RandomCohort random_cohort(std::mt19937& rng, std::size_t max_size = 200) {
    std::uniform_int_distribution<std::size_t> size(1, max_size);
    std::uniform_int_distribution<int> coin(0, 1);
    RandomCohort cohort;
    std::size_t n = size(rng);
    for (std::size_t i = 0; i < n; ++i) {
        std::string id = "cand" + std::to_string(i);
        for (Condition c : kAllConditions) {
            cohort.open.push_back(eval(id, c, coin(rng), coin(rng), coin(rng)));
        }
        cohort.official.push_back(rec(id, coin(rng), coin(rng), coin(rng)));
    }
    return cohort;
}

}  // namespace

TEST_CASE("self-agreement is 100% in every cell") {
    std::mt19937 rng(17);
    RandomCohort cohort = random_cohort(rng, 40);

    std::vector<OfficialRecord> as_official;
    for (const auto& e : cohort.open) {
        if (e.condition != Condition::CCV) continue;
        OfficialRecord r;
        r.candidate_id = e.candidate_id;
        r.outcome = e.outcome;
        as_official.push_back(r);
    }
    std::vector<CandidateEvaluation> ccv_only;
    for (const auto& e : cohort.open) {
        if (e.condition == Condition::CCV) ccv_only.push_back(e);
    }

    auto report = agreement_table(ccv_only, as_official);
    for (Metric m : kAllMetrics) CHECK(report.pct(Condition::CCV, m) == 100.0);

    auto flips = flip_table(ccv_only, as_official);
    for (Metric m : kAllMetrics) {
        CHECK(flips.plus_pct(Condition::CCV, m) == 0.0);
        CHECK(flips.minus_pct(Condition::CCV, m) == 0.0);
    }
}

TEST_CASE("hand-counted four-candidate cohort") {
    // overall open: P F F P  vs official: P P F F -> agree on 2 of 4
    std::vector<CandidateEvaluation> open = {
        eval("1", Condition::CCV, true, true, true),    // overall pass
        eval("2", Condition::CCV, false, false, true),  // overall fail
        eval("3", Condition::CCV, false, false, false), // overall fail
        eval("4", Condition::CCV, true, true, false),   // overall pass
    };
    std::vector<OfficialRecord> official = {
        rec("1", true, true, true),    // pass
        rec("2", true, true, false),   // pass
        rec("3", false, false, false), // fail
        rec("4", false, false, true),  // fail
    };

    auto agreement = agreement_table(open, official);
    CHECK(agreement.cohort_size == 4);
    CHECK(agreement.pct(Condition::CCV, Metric::Overall) == 50.0);

    auto flips = flip_table(open, official);
    CHECK(flips.plus_pct(Condition::CCV, Metric::Overall) == 25.0);
    CHECK(flips.minus_pct(Condition::CCV, Metric::Overall) == 25.0);
}

TEST_CASE("published cells are consistent at two-decimal rounding") {
    // Full professor / CCV / overall: 59.07 agreement, +0.19, -40.73.
    CHECK(59.07 + 0.19 + 40.73 == doctest::Approx(99.99).epsilon(1e-9));
}

TEST_CASE("agreement, plus and minus partition the cohort exactly") {
    std::mt19937 rng(2025);
    for (int iter = 0; iter < 100; ++iter) {
        RandomCohort cohort = random_cohort(rng);
        auto agreement = agreement_table(cohort.open, cohort.official);
        auto flips = flip_table(cohort.open, cohort.official);
        REQUIRE(agreement.cohort_size == flips.cohort_size);
        for (Condition c : agreement.conditions) {
            for (Metric m : kAllMetrics) {
                // Exact integer partition: equivalent to the percentage sum
                // being exactly 100 in full-precision (rational) arithmetic.
                CHECK(agreement.count(c, m) + flips.plus_count(c, m) + flips.minus_count(c, m) ==
                      agreement.cohort_size);
            }
        }
    }
}

TEST_CASE("reports match a naive recount oracle") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 30; ++iter) {
        RandomCohort cohort = random_cohort(rng, 120);
        auto agreement = agreement_table(cohort.open, cohort.official);
        auto flips = flip_table(cohort.open, cohort.official);

        for (Condition c : kAllConditions) {
            for (Metric m : kAllMetrics) {
                std::size_t agree = 0;
                std::size_t plus = 0;
                std::size_t minus = 0;
                for (const auto& e : cohort.open) {
                    if (e.condition != c) continue;
                    const OfficialRecord* match = nullptr;
                    for (const auto& r : cohort.official) {
                        if (r.candidate_id == e.candidate_id) match = &r;
                    }
                    REQUIRE(match != nullptr);
                    bool open_flag = metric_flag(e.outcome, m);
                    bool official_flag = metric_flag(match->outcome, m);
                    if (open_flag == official_flag) ++agree;
                    if (open_flag && !official_flag) ++plus;
                    if (!open_flag && official_flag) ++minus;
                }
                CHECK(agreement.count(c, m) == agree);
                CHECK(flips.plus_count(c, m) == plus);
                CHECK(flips.minus_count(c, m) == minus);
            }
        }
    }
}

TEST_CASE("swapping open and official swaps plus and minus, agreement unchanged") {
    std::mt19937 rng(909);
    RandomCohort cohort = random_cohort(rng, 60);

    std::vector<CandidateEvaluation> ccv_only;
    for (const auto& e : cohort.open) {
        if (e.condition == Condition::CCV) ccv_only.push_back(e);
    }
    std::vector<CandidateEvaluation> official_as_open;
    std::vector<OfficialRecord> open_as_official;
    for (const auto& r : cohort.official) {
        CandidateEvaluation e;
        e.candidate_id = r.candidate_id;
        e.condition = Condition::CCV;
        e.outcome = r.outcome;
        official_as_open.push_back(e);
    }
    for (const auto& e : ccv_only) {
        OfficialRecord r;
        r.candidate_id = e.candidate_id;
        r.outcome = e.outcome;
        open_as_official.push_back(r);
    }

    auto forward = flip_table(ccv_only, cohort.official);
    auto backward = flip_table(official_as_open, open_as_official);
    auto agree_fwd = agreement_table(ccv_only, cohort.official);
    auto agree_bwd = agreement_table(official_as_open, open_as_official);

    for (Metric m : kAllMetrics) {
        CHECK(forward.plus_count(Condition::CCV, m) == backward.minus_count(Condition::CCV, m));
        CHECK(forward.minus_count(Condition::CCV, m) == backward.plus_count(Condition::CCV, m));
        CHECK(agree_fwd.count(Condition::CCV, m) == agree_bwd.count(Condition::CCV, m));
    }
}

TEST_CASE("unmatched candidates are an error by default, droppable on request") {
    std::vector<CandidateEvaluation> open = {eval("a", Condition::CCV, true, true, true),
                                             eval("ghost", Condition::CCV, false, false, false)};
    std::vector<OfficialRecord> official = {rec("a", true, true, true),
                                            rec("orphan", false, false, true)};

    CHECK_THROWS_AS(agreement_table(open, official), UnmatchedCandidate);
    CHECK_THROWS_AS(flip_table(open, official), UnmatchedCandidate);

    auto report = agreement_table(open, official, MatchPolicy::DropAndWarn);
    CHECK(report.cohort_size == 1);
    CHECK(report.dropped_open == 1);
    CHECK(report.dropped_official == 1);
}

TEST_CASE("sweep at ratio 1.0 reproduces the agreement table") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> value(0.0, 20.0);
    ThresholdSet base{Role::FullProfessor, 8, 216, 8};

    std::vector<std::pair<std::string, IndicatorTriple>> triples;
    std::vector<CandidateEvaluation> open;
    std::vector<OfficialRecord> official;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 150; ++i) {
        std::string id = "c" + std::to_string(i);
        IndicatorTriple t{value(rng), value(rng) * 20, value(rng)};
        triples.emplace_back(id, t);
        CandidateEvaluation e;
        e.candidate_id = id;
        e.condition = Condition::CU;
        e.triple = t;
        e.outcome = evaluate(t, base);
        open.push_back(e);
        official.push_back(rec(id, coin(rng), coin(rng), coin(rng)));
    }

    auto series = threshold_sweep(triples, official, base, {1.0});
    auto agreement = agreement_table(open, official);
    for (Metric m : kAllMetrics) {
        CHECK(series.pct(m, 0) == agreement.pct(Condition::CU, m));
    }
    CHECK(series.scaled_thresholds[0] == base);
}

TEST_CASE("sweep can be non-monotone: lowering thresholds may break agreement") {
    // Official flag is fail; the open value sits between 60% and 100% of the
    // threshold, so lowering the threshold turns agreement into a '+' flip.
    std::vector<std::pair<std::string, IndicatorTriple>> triples = {
        {"x", IndicatorTriple{4, 100, 4}}};
    std::vector<OfficialRecord> official = {rec("x", false, false, false)};
    ThresholdSet base{Role::AssociateProfessor, 5, 118, 6};

    auto series = threshold_sweep(triples, official, base, {0.5, 1.0});
    CHECK(series.pct(Metric::Journals, 1) == 100.0);  // 4 < 5 agrees with fail
    CHECK(series.pct(Metric::Journals, 0) == 0.0);    // 4 >= 3 disagrees
}

TEST_CASE("a cohort built to pass at 60% of the thresholds agrees there") {
    ThresholdSet base{Role::AssociateProfessor, 5, 118, 6};
    auto at60 = scale_thresholds(base, 0.60);

    std::vector<std::pair<std::string, IndicatorTriple>> triples;
    std::vector<OfficialRecord> official;
    for (int i = 0; i < 25; ++i) {
        std::string id = "p" + std::to_string(i);
        triples.emplace_back(id, IndicatorTriple{static_cast<double>(at60.t_a),
                                                 static_cast<double>(at60.t_b),
                                                 static_cast<double>(at60.t_c)});
        official.push_back(rec(id, true, true, true));  // official flag: pass
    }

    auto series = threshold_sweep(triples, official, base, {0.60, 1.0});
    for (Metric m : kAllMetrics) CHECK(series.pct(m, 0) == 100.0);
    // at full thresholds the same candidates fail every indicator
    for (Metric m : kAllMetrics) CHECK(series.pct(m, 1) == 0.0);
}

TEST_CASE("sweep validates its ratio grid") {
    std::vector<std::pair<std::string, IndicatorTriple>> triples = {{"x", IndicatorTriple{}}};
    std::vector<OfficialRecord> official = {rec("x", false, false, false)};
    ThresholdSet base{Role::FullProfessor, 8, 216, 8};
    CHECK_THROWS_AS(threshold_sweep(triples, official, base, {}), InvalidRatio);
    CHECK_THROWS_AS(threshold_sweep(triples, official, base, {0.5, 1.5}), InvalidRatio);
}

TEST_CASE("dataset stats: totals, averages and the empty-cohort flag") {
    auto empty = dataset_stats({});
    CHECK(empty.associate.cv_count == 0);
    CHECK_FALSE(empty.associate.averages_defined);
    CHECK(empty.associate.avg_union == 0.0);

    Candidate c1;
    c1.id = "1";
    c1.role = Role::FullProfessor;
    for (int i = 0; i < 10; ++i) {
        c1.cv_dois.insert(Doi::from_normalized("10.1/cv" + std::to_string(i)));
    }
    Candidate c2;
    c2.id = "2";
    c2.role = Role::FullProfessor;
    for (int i = 0; i < 20; ++i) {
        c2.dblp_dois.insert(Doi::from_normalized("10.1/db" + std::to_string(i)));
    }

    auto stats = dataset_stats({c1, c2});
    CHECK(stats.full.cv_count == 2);
    CHECK(stats.full.dois_union == 30);
    CHECK(stats.full.avg_union == 15.0);
    CHECK(stats.full.averages_defined);
    CHECK(stats.associate.cv_count == 0);

    // union never exceeds the sum of the two sources
    Candidate c3;
    c3.id = "3";
    c3.role = Role::AssociateProfessor;
    c3.cv_dois.insert(Doi::from_normalized("10.1/shared"));
    c3.dblp_dois.insert(Doi::from_normalized("10.1/shared"));
    auto overlap = dataset_stats({c3});
    CHECK(overlap.associate.dois_union == 1);
}

TEST_CASE("report renderers include every condition and metric") {
    std::mt19937 rng(5150);
    RandomCohort cohort = random_cohort(rng, 20);
    auto agreement = agreement_table(cohort.open, cohort.official);
    auto flips = flip_table(cohort.open, cohort.official);

    std::string table = render_agreement_table(agreement, "Full Professor");
    for (Metric m : kAllMetrics) CHECK(table.find(metric_name(m)) != std::string::npos);
    for (Condition c : kAllConditions) CHECK(table.find(condition_name(c)) != std::string::npos);

    std::string csv = agreement_csv(agreement);
    CHECK(csv.find("condition,metric,agreement_pct") == 0);
    CHECK(flip_csv(flips).find("plus_pct") != std::string::npos);

    std::vector<std::pair<std::string, IndicatorTriple>> triples = {
        {"cand0", IndicatorTriple{3, 70, 4}}};
    std::vector<OfficialRecord> official = {rec("cand0", true, false, true)};
    auto series = threshold_sweep(triples, official, ThresholdSet{Role::FullProfessor, 8, 216, 8},
                                  {0.5, 0.75, 1.0});
    std::string svg = sweep_svg(series, "sweep");
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("polyline") != std::string::npos);
    std::string sweep = sweep_csv(series);
    CHECK(sweep.find("ratio,indicator,agreement_pct") == 0);
}
