#include <doctest.h>

#include <random>
#include <sstream>

#include "asneval/config.hpp"
#include "asneval/errors.hpp"
#include "asneval/formats.hpp"
#include "asneval/pipeline.hpp"
#include "asneval/util.hpp"
#include "support/stubs.hpp"
#include "support/test_util.hpp"

using namespace asneval;

namespace {

CitationIndex make_index(const std::string& csv) {
    std::istringstream in(csv);
    CitationIndexBuilder builder;
    builder.ingest_csv(in);
    return builder.build();
}

class MapMetadata final : public MetadataSource {
public:
    std::unordered_map<Doi, WorkMetadata> works;

    std::optional<WorkMetadata> work(const Doi& doi) override {
        auto it = works.find(doi);
        if (it == works.end()) return std::nullopt;
        return it->second;
    }

    void add(const std::string& doi, const std::string& type, std::optional<int> year = {}) {
        WorkMetadata meta;
        meta.doi = Doi::from_normalized(doi);
        meta.type_label = type;
        meta.year = year;
        works[meta.doi] = std::move(meta);
    }
};

CandidateInput make_input(const std::string& id, Role role,
                          std::initializer_list<const char*> cv,
                          std::initializer_list<const char*> dblp,
                          std::optional<int> first_pub_year = {}) {
    CandidateInput input;
    input.candidate.id = id;
    input.candidate.role = role;
    input.candidate.name = "Candidate " + id;
    input.candidate.first_pub_year = first_pub_year;
    for (const char* d : cv) input.candidate.cv_dois.insert(Doi::from_normalized(d));
    for (const char* d : dblp) input.candidate.dblp_dois.insert(Doi::from_normalized(d));
    return input;
}

PipelineConfig test_config() {
    PipelineConfig config = default_config();
    config.parallelism = 2;
    return config;
}

const EvaluationRow& row_for(const CohortResult& result, const std::string& id, Condition c) {
    for (const EvaluationRow& row : result.rows) {
        if (row.candidate_id == id && row.condition == c) return row;
    }
    throw std::runtime_error("row not found");
}

}  // namespace

TEST_CASE("identical cv and dblp sets give identical triples under all conditions") {
    auto index = make_index(
        "citing,cited\n"
        "10.2/x1,10.1/a\n"
        "10.2/x2,10.1/a\n"
        "10.2/x1,10.1/b\n");
    IndexCitationSource citations(index);
    MapMetadata metadata;
    metadata.add("10.1/a", "journal-article", 2010);
    metadata.add("10.1/b", "proceedings-article", 2012);

    auto input = make_input("c1", Role::FullProfessor, {"10.1/a", "10.1/b"},
                            {"10.1/a", "10.1/b"}, 2010);
    auto result = run_cohort({input}, test_config(), citations, &metadata);

    REQUIRE(result.rows.size() == 3);
    auto ccv = row_for(result, "c1", Condition::CCV);
    auto cdblp = row_for(result, "c1", Condition::CDBLP);
    auto cu = row_for(result, "c1", Condition::CU);
    CHECK(ccv.triple == cdblp.triple);
    CHECK(ccv.triple == cu.triple);
    CHECK(ccv.outcome == cu.outcome);
    CHECK(ccv.triple == IndicatorTriple{1, 3, 1});  // one journal, 2+1 citations, h=1
}

TEST_CASE("union condition dominates each source condition componentwise") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> pick(0, 19);

    std::vector<std::string> pool;
    for (int i = 0; i < 20; ++i) pool.push_back(testutil::random_doi(rng));

    std::ostringstream csv;
    csv << "citing,cited\n";
    for (int i = 0; i < 600; ++i) {
        csv << testutil::random_doi(rng) << "," << pool[pick(rng)] << "\n";
    }
    auto index = make_index(csv.str());
    IndexCitationSource citations(index);

    MapMetadata metadata;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        metadata.add(pool[i], i % 3 == 0 ? "journal-article" : "proceedings-article",
                     2000 + static_cast<int>(i % 15));
    }

    std::vector<CandidateInput> cohort;
    for (int c = 0; c < 12; ++c) {
        CandidateInput input;
        input.candidate.id = "cand" + std::to_string(c);
        input.candidate.role = Role::AssociateProfessor;
        input.candidate.name = input.candidate.id;
        for (int i = 0; i < 8; ++i) {
            input.candidate.cv_dois.insert(Doi::from_normalized(pool[pick(rng)]));
            input.candidate.dblp_dois.insert(Doi::from_normalized(pool[pick(rng)]));
        }
        cohort.push_back(std::move(input));
    }

    auto result = run_cohort(cohort, test_config(), citations, &metadata);
    for (const auto& input : cohort) {
        auto cu = row_for(result, input.candidate.id, Condition::CU).triple;
        for (Condition c : {Condition::CCV, Condition::CDBLP}) {
            auto source = row_for(result, input.candidate.id, c).triple;
            CHECK(cu.a >= source.a);
            CHECK(cu.b >= source.b);
            CHECK(cu.c >= source.c);
        }
    }
}

TEST_CASE("zero-DOI candidate evaluates to zeros and fails overall") {
    auto index = make_index("citing,cited\n");
    IndexCitationSource citations(index);

    auto input = make_input("empty", Role::FullProfessor, {}, {});
    auto result = run_cohort({input}, test_config(), citations, nullptr);

    REQUIRE(result.rows.size() == 3);
    for (const auto& row : result.rows) {
        CHECK(row.triple == IndicatorTriple{0, 0, 0});
        CHECK_FALSE(row.outcome.overall);
    }
}

TEST_CASE("empty cohort and duplicate ids are rejected") {
    auto index = make_index("citing,cited\n");
    IndexCitationSource citations(index);
    CHECK_THROWS_AS(run_cohort({}, test_config(), citations, nullptr), EmptyCohort);

    auto a = make_input("same", Role::FullProfessor, {}, {});
    auto b = make_input("same", Role::FullProfessor, {}, {});
    CHECK_THROWS_AS(run_cohort({a, b}, test_config(), citations, nullptr), Error);
}

TEST_CASE("missing thresholds for a roster role is a configuration error") {
    auto index = make_index("citing,cited\n");
    IndexCitationSource citations(index);
    PipelineConfig config = test_config();
    config.thresholds.erase(Role::AssociateProfessor);

    auto input = make_input("a1", Role::AssociateProfessor, {"10.1/a"}, {});
    CHECK_THROWS_AS(run_cohort({input}, config, citations, nullptr), ConfigError);
}

TEST_CASE("without metadata every venue is unknown: B and C still count") {
    auto index = make_index(
        "citing,cited\n"
        "10.2/x1,10.1/a\n"
        "10.2/x2,10.1/a\n");
    IndexCitationSource citations(index);

    auto input = make_input("c1", Role::FullProfessor, {"10.1/a"}, {}, 2016);
    auto result = run_cohort({input}, test_config(), citations, nullptr);

    auto cu = row_for(result, "c1", Condition::CU);
    CHECK(cu.triple == IndicatorTriple{0, 2, 1});
    CHECK(result.counters.venue_unknown == 1);
    CHECK(result.counters.publications_total == 1);
}

TEST_CASE("dblp work labels classify without crossref") {
    auto index = make_index("citing,cited\n");
    IndexCitationSource citations(index);

    auto input = make_input("c1", Role::FullProfessor, {}, {"10.1/j", "10.1/informal"}, 2016);
    WorkMetadata journal;
    journal.doi = Doi::from_normalized("10.1/j");
    journal.type_label = "article";
    WorkMetadata informal;
    informal.doi = Doi::from_normalized("10.1/informal");
    informal.type_label = "article/informal";
    input.dblp_works = {{journal.doi, journal}, {informal.doi, informal}};

    auto result = run_cohort({input}, test_config(), citations, nullptr);
    CHECK(row_for(result, "c1", Condition::CDBLP).triple.a == 1);  // informal not a journal
    CHECK(result.counters.venue_unknown == 0);
}

TEST_CASE("scientific age: roster year, then earliest metadata year, then default") {
    auto index = make_index("citing,cited\n");
    IndexCitationSource citations(index);
    PipelineConfig config = test_config();
    config.normalization = NormalizationStrategy::per_year();
    config.reference_year = 2016;

    MapMetadata metadata;
    metadata.add("10.1/a", "journal-article", 2007);  // age 10 via min-year fallback

    SUBCASE("first_pub_year wins over metadata") {
        auto input = make_input("c", Role::FullProfessor, {"10.1/a"}, {}, 2012);  // age 5
        auto result = run_cohort({input}, config, citations, &metadata);
        CHECK(row_for(result, "c", Condition::CU).triple.a == doctest::Approx(1.0 / 5));
        CHECK(result.counters.age_from_first_pub == 1);
    }
    SUBCASE("earliest publication year fills the gap") {
        auto input = make_input("c", Role::FullProfessor, {"10.1/a"}, {});
        auto result = run_cohort({input}, config, citations, &metadata);
        CHECK(row_for(result, "c", Condition::CU).triple.a == doctest::Approx(1.0 / 10));
        CHECK(result.counters.age_from_min_year == 1);
    }
    SUBCASE("no year information defaults to age one") {
        auto input = make_input("c", Role::FullProfessor, {"10.1/a"}, {});
        auto result = run_cohort({input}, config, citations, nullptr);
        CHECK(row_for(result, "c", Condition::CU).triple.b == 0.0);
        CHECK(result.counters.age_defaulted == 1);
    }
}

TEST_CASE("results are deterministic and independent of parallelism") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> pick(0, 14);
    std::vector<std::string> pool;
    for (int i = 0; i < 15; ++i) pool.push_back(testutil::random_doi(rng));

    std::ostringstream csv;
    csv << "citing,cited\n";
    for (int i = 0; i < 200; ++i) {
        csv << testutil::random_doi(rng) << "," << pool[pick(rng)] << "\n";
    }
    auto index = make_index(csv.str());
    IndexCitationSource citations(index);
    MapMetadata metadata;
    for (const auto& d : pool) metadata.add(d, "journal-article", 2005);

    std::vector<CandidateInput> cohort;
    for (int c = 0; c < 9; ++c) {
        CandidateInput input;
        input.candidate.id = "z" + std::to_string(c);
        input.candidate.role = c % 2 ? Role::FullProfessor : Role::AssociateProfessor;
        input.candidate.name = input.candidate.id;
        for (int i = 0; i < 5; ++i) {
            input.candidate.cv_dois.insert(Doi::from_normalized(pool[pick(rng)]));
            input.candidate.dblp_dois.insert(Doi::from_normalized(pool[pick(rng)]));
        }
        cohort.push_back(std::move(input));
    }

    PipelineConfig serial = test_config();
    serial.parallelism = 1;
    PipelineConfig parallel = test_config();
    parallel.parallelism = 8;

    auto r1 = run_cohort(cohort, serial, citations, &metadata);
    auto r2 = run_cohort(cohort, parallel, citations, &metadata);
    CHECK(r1 == r2);

    CHECK(export_results(r1, ExportFormat::Csv) == export_results(r2, ExportFormat::Csv));
    CHECK(export_results(r1, ExportFormat::Json) == export_results(r2, ExportFormat::Json));
}

TEST_CASE("export: stable order, header-only CSV for an empty result, json round-trip") {
    CohortResult empty;
    CHECK(export_results(empty, ExportFormat::Csv) ==
          "candidate_id,condition,role,a,b,c,pass_a,pass_b,pass_c,overall\n");

    auto index = make_index(
        "citing,cited\n"
        "10.2/x,10.1/a\n");
    IndexCitationSource citations(index);
    MapMetadata metadata;
    metadata.add("10.1/a", "journal-article", 2010);

    auto b_input = make_input("bbb", Role::FullProfessor, {"10.1/a"}, {}, 2010);
    auto a_input = make_input("aaa", Role::AssociateProfessor, {}, {"10.1/a"}, 2011);
    auto result = run_cohort({b_input, a_input}, test_config(), citations, &metadata);

    // rows sorted by candidate id, then CCV/CDBLP/CU
    REQUIRE(result.rows.size() == 6);
    CHECK(result.rows[0].candidate_id == "aaa");
    CHECK(result.rows[0].condition == Condition::CCV);
    CHECK(result.rows[2].condition == Condition::CU);
    CHECK(result.rows[3].candidate_id == "bbb");

    auto json_text = export_results(result, ExportFormat::Json);
    auto back = import_results_json(json_text);
    CHECK(back == result);

    // exporting twice is byte-identical
    CHECK(export_results(result, ExportFormat::Json) == json_text);
}

TEST_CASE("rest citation source counts distinct citing DOIs") {
    ManualClock clock;
    testutil::StubTransport transport;
    transport.add("/index/coci/api/v1/citations/10.1016/j.joi.2015.02.006", 200,
                  read_file(std::filesystem::path(ASNEVAL_TEST_DATA_DIR) / "fixtures" /
                            "coci_citations_joi.json"));

    EndpointConfig endpoint;
    endpoint.name = "coci";
    endpoint.base_url = "http://stub.local";
    endpoint.rate_limit_per_sec = 1000;
    ApiClient api(endpoint, transport, clock, nullptr, "asneval-tests/0.1 (mailto:d@e.org)");
    CociClient coci(api);
    RestCitationSource source(coci);

    std::set<Doi> dois = {Doi::from_normalized("10.1016/j.joi.2015.02.006"),
                          Doi::from_normalized("10.1/none")};
    auto counts = source.counts_for(dois);
    CHECK(counts.at(Doi::from_normalized("10.1016/j.joi.2015.02.006")) == 3);
    CHECK(counts.at(Doi::from_normalized("10.1/none")) == 0);
}

TEST_CASE("config: defaults, parsing, role swap and rejection of junk") {
    auto defaults = default_config();
    CHECK(defaults.thresholds.at(Role::FullProfessor) ==
          ThresholdSet{Role::FullProfessor, 8, 216, 8});
    CHECK(defaults.thresholds.at(Role::AssociateProfessor) ==
          ThresholdSet{Role::AssociateProfessor, 5, 118, 6});
    CHECK(defaults.comparison == ComparisonRule::GreaterEqual);

    auto parsed = parse_config(default_config_text(), "default.ini");
    CHECK(parsed.thresholds == defaults.thresholds);
    CHECK(parsed.reference_year == 2016);
    CHECK(parsed.harvest.rate_limit_per_sec == 2);
    CHECK(parsed.harvest.max_retries == 3);
    CHECK(parsed.citations.kind == CitationSourceConfig::Kind::LocalDump);

    auto swapped = parse_config(
        "[thresholds.full]\na=8\nb=216\nc=8\n"
        "[thresholds.associate]\na=5\nb=118\nc=6\n"
        "[comparison]\ntable2_as_printed = true\n",
        "swap.ini");
    CHECK(swapped.thresholds.at(Role::FullProfessor).t_a == 5);
    CHECK(swapped.thresholds.at(Role::AssociateProfessor).t_a == 8);

    auto window = parse_config(
        "[thresholds.full]\na=8\nb=216\nc=8\n"
        "[normalization]\nstrategy = window\nwindow_years = 10\n",
        "w.ini");
    CHECK(window.normalization == NormalizationStrategy::window(10));

    CHECK_THROWS_AS(parse_config("[thresholds.full]\na=8\nb=216\nc=8\n[nope]\nx=1\n", "t"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("[thresholds.full]\na=8\nb=216\nc=8\ntypo=1\n", "t"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("[normalization]\nstrategy=none\n", "t"), ConfigError);
    CHECK_THROWS_AS(parse_config("[thresholds.full]\na=-1\nb=216\nc=8\n", "t"), ConfigError);
    CHECK_THROWS_AS(
        parse_config("[thresholds.full]\na=8\nb=216\nc=8\n[normalization]\nstrategy=weird\n",
                     "t"),
        ConfigError);
}

TEST_CASE("shipped default.ini matches the built-in default configuration") {
    auto path = std::filesystem::path(ASNEVAL_TEST_DATA_DIR).parent_path().parent_path() /
                "tools" / "default.ini";
    CHECK(read_file(path) == default_config_text());
}

TEST_CASE("environment variables override file settings") {
    PipelineConfig config = default_config();
    setenv("ASNEVAL_CACHE_ROOT", "/tmp/envcache", 1);
    setenv("ASNEVAL_DBLP_BASE", "http://127.0.0.1:9", 1);
    setenv("ASNEVAL_RATE_LIMIT", "7", 1);
    apply_env_overrides(config);
    unsetenv("ASNEVAL_CACHE_ROOT");
    unsetenv("ASNEVAL_DBLP_BASE");
    unsetenv("ASNEVAL_RATE_LIMIT");

    CHECK(config.harvest.cache_root == std::filesystem::path("/tmp/envcache"));
    CHECK(config.harvest.dblp_base == "http://127.0.0.1:9");
    CHECK(config.harvest.rate_limit_per_sec == 7);
}

TEST_CASE("roster loading: required fields, relative paths, duplicates") {
    testutil::TempDir tmp("roster");
    atomic_write_file(tmp.path() / "lists" / "c1.cv.txt", "10.1/a\n# comment\n\n10.1/b\n");
    atomic_write_file(tmp.path() / "roster.csv",
                      "id,role,name,orcid,first_pub_year,cv_dois_path\n"
                      "c1,full,Maria Rossi,0000-0001-5000-0007,2005,lists/c1.cv.txt\n"
                      "c2,associate,Juan Pérez,,,\n");

    auto roster = load_roster(tmp.path() / "roster.csv");
    REQUIRE(roster.size() == 2);
    CHECK(roster[0].id == "c1");
    CHECK(roster[0].role == Role::FullProfessor);
    CHECK(roster[0].first_pub_year == 2005);
    REQUIRE(roster[0].cv_dois_path.has_value());
    CHECK(read_doi_list(*roster[0].cv_dois_path).size() == 2);
    CHECK(roster[1].orcid == std::nullopt);
    CHECK(roster[1].first_pub_year == std::nullopt);

    atomic_write_file(tmp.path() / "dup.csv", "id,role,name\nx,full,A\nx,full,B\n");
    CHECK_THROWS_AS(load_roster(tmp.path() / "dup.csv"), Error);

    atomic_write_file(tmp.path() / "nocol.csv", "id,name\nx,A\n");
    CHECK_THROWS_AS(load_roster(tmp.path() / "nocol.csv"), MissingColumn);

    CHECK_THROWS_AS(load_roster(tmp.path() / "missing.csv"), IoError);
}

TEST_CASE("doi list files reject malformed lines with their location") {
    testutil::TempDir tmp("doilist");
    atomic_write_file(tmp.path() / "bad.txt", "10.1/a\nnot a doi\n");
    try {
        read_doi_list(tmp.path() / "bad.txt");
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }

    write_doi_list(tmp.path() / "out.txt",
                   {Doi::from_normalized("10.1/a"), Doi::from_normalized("10.1/b")});
    CHECK(read_doi_list(tmp.path() / "out.txt").size() == 2);
}

TEST_CASE("official records load from flags or derive from triples") {
    testutil::TempDir tmp("official");

    atomic_write_file(tmp.path() / "flags.csv",
                      "id,role,pass_a,pass_b,pass_c,overall\n"
                      "c1,full,1,1,0,1\n"
                      "c2,full,0,0,0,0\n");
    auto flags = load_official_csv(tmp.path() / "flags.csv", nullptr,
                                   ComparisonRule::GreaterEqual);
    REQUIRE(flags.size() == 2);
    CHECK(flags[0].outcome.overall);
    CHECK_FALSE(flags[0].triple.has_value());

    atomic_write_file(tmp.path() / "triples.csv",
                      "id,role,a,b,c\n"
                      "c1,full,15,417,12\n"
                      "c2,full,8,197,7\n");
    auto thresholds = default_config().thresholds;
    auto derived = load_official_csv(tmp.path() / "triples.csv", &thresholds,
                                     ComparisonRule::GreaterEqual);
    REQUIRE(derived.size() == 2);
    CHECK(derived[0].outcome.overall);
    CHECK(derived[0].outcome.pass_a);
    CHECK_FALSE(derived[1].outcome.overall);
    CHECK(derived[1].outcome.pass_a);

    // values without thresholds cannot produce flags
    CHECK_THROWS_AS(
        load_official_csv(tmp.path() / "triples.csv", nullptr, ComparisonRule::GreaterEqual),
        ConfigError);

    // contradictory overall column
    atomic_write_file(tmp.path() / "broken.csv",
                      "id,role,pass_a,pass_b,pass_c,overall\nc1,full,1,1,0,0\n");
    CHECK_THROWS_AS(
        load_official_csv(tmp.path() / "broken.csv", nullptr, ComparisonRule::GreaterEqual),
        Error);
}

TEST_CASE("results csv round-trips through the loader") {
    auto index = make_index(
        "citing,cited\n"
        "10.2/x,10.1/a\n");
    IndexCitationSource citations(index);
    MapMetadata metadata;
    metadata.add("10.1/a", "journal-article", 2010);

    auto input = make_input("c1", Role::FullProfessor, {"10.1/a"}, {}, 2010);
    auto result = run_cohort({input}, test_config(), citations, &metadata);

    testutil::TempDir tmp("results");
    atomic_write_file(tmp.path() / "results.csv", export_results(result, ExportFormat::Csv));
    auto rows = load_results_csv(tmp.path() / "results.csv");
    CHECK(rows == result.rows);
}

TEST_CASE("materialization pulls inputs from files or the DBLP client") {
    testutil::TempDir tmp("mat");
    MaterializeOptions options;
    MaterializeLog log;

    SUBCASE("cv list file and dblp list file") {
        atomic_write_file(tmp.path() / "cv.txt", "10.1/a\n10.1/b\n");
        atomic_write_file(tmp.path() / "dblp.txt", "10.1/b\n10.1/c\n");
        RosterEntry entry;
        entry.id = "c1";
        entry.role = Role::FullProfessor;
        entry.name = "Maria Rossi";
        entry.cv_dois_path = tmp.path() / "cv.txt";
        entry.dblp_dois_path = tmp.path() / "dblp.txt";

        auto input = materialize_candidate(entry, nullptr, options, log);
        CHECK(input.candidate.cv_dois.size() == 2);
        CHECK(input.candidate.dblp_dois.size() == 2);
        CHECK(input.dblp_works.empty());
        CHECK(log.warnings.empty());
    }

    SUBCASE("cv text extraction") {
        atomic_write_file(tmp.path() / "cv.txt",
                          "Selected publications: DOI:10.1016/j.joi.2015.02.006. "
                          "Also https://doi.org/10.5281/zenodo.2559481,\n");
        RosterEntry entry;
        entry.id = "c2";
        entry.role = Role::AssociateProfessor;
        entry.name = "Maria Rossi";
        entry.cv_text_path = tmp.path() / "cv.txt";

        auto input = materialize_candidate(entry, nullptr, options, log);
        CHECK(input.candidate.cv_dois.size() == 2);
    }

    SUBCASE("dblp harvest path with score gate") {
        ManualClock clock;
        testutil::StubTransport transport;
        transport.add("/search/author/api?q=Maria%20Rossi&format=json&h=100", 200,
                      read_file(std::filesystem::path(ASNEVAL_TEST_DATA_DIR) / "fixtures" /
                                "dblp_author_search.json"));
        transport.add("/pid/11/1111.xml", 200,
                      read_file(std::filesystem::path(ASNEVAL_TEST_DATA_DIR) / "fixtures" /
                                "dblp_person_11_1111.xml"));
        EndpointConfig endpoint;
        endpoint.name = "dblp";
        endpoint.base_url = "http://stub.local";
        endpoint.rate_limit_per_sec = 1000;
        ApiClient api(endpoint, transport, clock, nullptr,
                      "asneval-tests/0.1 (mailto:d@e.org)");
        DblpClient dblp(api);

        RosterEntry entry;
        entry.id = "c3";
        entry.role = Role::FullProfessor;
        entry.name = "Maria Rossi";

        auto input = materialize_candidate(entry, &dblp, options, log);
        CHECK(input.candidate.dblp_dois.size() == 4);
        CHECK(input.dblp_works.size() == 4);
        CHECK(log.dblp_publications_dropped_no_doi == 1);

        // nobody matches: warning, empty set
        transport.add("/search/author/api?q=Nessuno&format=json&h=100", 200,
                      R"({"result":{"hits":{"@total":"0"}}})");
        RosterEntry nobody;
        nobody.id = "c4";
        nobody.role = Role::FullProfessor;
        nobody.name = "Nessuno";
        auto empty = materialize_candidate(nobody, &dblp, options, log);
        CHECK(empty.candidate.dblp_dois.empty());
        REQUIRE(log.warnings.size() == 1);
        CHECK(log.warnings[0].find("c4") != std::string::npos);
    }
}
