#include <benchmark/benchmark.h>

#include <random>
#include <sstream>
#include <vector>

#include "asneval/analysis.hpp"
#include "asneval/citation_index.hpp"
#include "asneval/doi.hpp"
#include "asneval/doi_extract.hpp"
#include "asneval/evaluation.hpp"
#include "asneval/indicators.hpp"

using namespace asneval;

namespace {

std::string make_doi(std::mt19937& rng) {
    std::uniform_int_distribution<int> digit('0', '9');
    std::uniform_int_distribution<int> letter('a', 'z');
    std::string doi = "10.";
    for (int i = 0; i < 4; ++i) doi.push_back(static_cast<char>(digit(rng)));
    doi.push_back('/');
    for (int i = 0; i < 10; ++i) doi.push_back(static_cast<char>(letter(rng)));
    return doi;
}

std::string make_document(std::size_t words, double doi_share) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> letter('a', 'z');
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::ostringstream text;
    for (std::size_t i = 0; i < words; ++i) {
        if (coin(rng) < doi_share) {
            text << "doi:" << make_doi(rng) << ". ";
        } else {
            std::string word(6, 'x');
            for (char& c : word) c = static_cast<char>(letter(rng));
            text << word << ' ';
        }
    }
    return text.str();
}

std::string make_dump(std::size_t rows, std::size_t distinct) {
    std::mt19937 rng(11);
    std::vector<std::string> pool;
    pool.reserve(distinct);
    for (std::size_t i = 0; i < distinct; ++i) pool.push_back(make_doi(rng));
    std::uniform_int_distribution<std::size_t> pick(0, distinct - 1);
    std::ostringstream csv;
    csv << "citing,cited\n";
    for (std::size_t i = 0; i < rows; ++i) {
        csv << pool[pick(rng)] << ',' << pool[pick(rng)] << '\n';
    }
    return csv.str();
}

}  // namespace

static void BM_NormalizeDoi(benchmark::State& state) {
    std::string raw = "https://doi.org/10.1016/J.JOI.2015.02.006";
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize_doi(raw));
    }
}
BENCHMARK(BM_NormalizeDoi);

static void BM_ExtractDois(benchmark::State& state) {
    std::string document = make_document(static_cast<std::size_t>(state.range(0)), 0.05);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_dois(document));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * document.size()));
}
BENCHMARK(BM_ExtractDois)->Arg(1000)->Arg(10000);

static void BM_HIndex(benchmark::State& state) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> count(0, 500);
    std::vector<int> counts(static_cast<std::size_t>(state.range(0)));
    for (int& v : counts) v = count(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(h_index(counts));
    }
}
BENCHMARK(BM_HIndex)->Arg(50)->Arg(1000)->Arg(100000);

static void BM_IngestCsv(benchmark::State& state) {
    std::string dump = make_dump(static_cast<std::size_t>(state.range(0)), 5000);
    for (auto _ : state) {
        std::istringstream in(dump);
        CitationIndexBuilder builder;
        benchmark::DoNotOptimize(builder.ingest_csv(in));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IngestCsv)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_IncomingCount(benchmark::State& state) {
    std::string dump = make_dump(200000, 5000);
    std::istringstream in(dump);
    CitationIndexBuilder builder;
    builder.ingest_csv(in);
    CitationIndex index = builder.build();

    std::mt19937 rng(11);
    Doi probe = Doi::from_normalized(make_doi(rng));  // same seed: first pool entry
    for (auto _ : state) {
        benchmark::DoNotOptimize(index.incoming_count(probe));
    }
}
BENCHMARK(BM_IncomingCount);

static void BM_AgreementTable(benchmark::State& state) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<CandidateEvaluation> open;
    std::vector<OfficialRecord> official;
    for (int i = 0; i < state.range(0); ++i) {
        std::string id = "c" + std::to_string(i);
        for (Condition c : kAllConditions) {
            CandidateEvaluation eval;
            eval.candidate_id = id;
            eval.condition = c;
            eval.outcome = EvaluationOutcome::from_flags(coin(rng), coin(rng), coin(rng));
            open.push_back(std::move(eval));
        }
        OfficialRecord rec;
        rec.candidate_id = id;
        rec.outcome = EvaluationOutcome::from_flags(coin(rng), coin(rng), coin(rng));
        official.push_back(std::move(rec));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(agreement_table(open, official));
    }
}
BENCHMARK(BM_AgreementTable)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
