#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "asneval/doi.hpp"
#include "asneval/errors.hpp"
#include "support/test_util.hpp"

using namespace asneval;

TEST_CASE("normalize_doi keeps an already canonical DOI unchanged") {
    CHECK(normalize_doi("10.1016/j.joi.2015.02.006").str() == "10.1016/j.joi.2015.02.006");
}

TEST_CASE("normalize_doi strips labels and resolver URLs and folds case") {
    CHECK(normalize_doi("DOI:10.1016/J.JOI.2015.02.006").str() == "10.1016/j.joi.2015.02.006");
    CHECK(normalize_doi("doi:10.1016/j.joi.2015.02.006").str() == "10.1016/j.joi.2015.02.006");
    CHECK(normalize_doi("https://doi.org/10.5281/zenodo.2559481").str() ==
          "10.5281/zenodo.2559481");
    CHECK(normalize_doi("http://dx.doi.org/10.5281/ZENODO.2559481").str() ==
          "10.5281/zenodo.2559481");
    CHECK(normalize_doi("  10.1000/abc  ").str() == "10.1000/abc");
    CHECK(normalize_doi("doi: 10.1000/abc").str() == "10.1000/abc");
}

TEST_CASE("normalize_doi rejects malformed input") {
    CHECK_THROWS_AS(normalize_doi("doi: 10.1000"), MalformedDoi);  // no suffix
    CHECK_THROWS_AS(normalize_doi(""), MalformedDoi);
    CHECK_THROWS_AS(normalize_doi("10.1000/"), MalformedDoi);
    CHECK_THROWS_AS(normalize_doi("10./abc"), MalformedDoi);
    CHECK_THROWS_AS(normalize_doi("10.1234567890/abc"), MalformedDoi);  // >9 digits
    CHECK_THROWS_AS(normalize_doi("11.1234/abc"), MalformedDoi);
    CHECK_THROWS_AS(normalize_doi("10.1000/a b"), MalformedDoi);  // inner whitespace
    // only one prefix is stripped
    CHECK_THROWS_AS(normalize_doi("https://doi.org/doi:10.1000/abc"), MalformedDoi);
}

TEST_CASE("is_valid_doi_syntax accepts canonical DOIs only") {
    CHECK(is_valid_doi_syntax("10.5281/zenodo.2559481"));
    CHECK(is_valid_doi_syntax("10.1/a"));
    CHECK_FALSE(is_valid_doi_syntax(""));
    CHECK_FALSE(is_valid_doi_syntax("11.1234/abc"));
    CHECK_FALSE(is_valid_doi_syntax("10.1016/J.JOI.2015.02.006"));  // uppercase
    CHECK_FALSE(is_valid_doi_syntax("doi:10.1000/abc"));
    CHECK_FALSE(is_valid_doi_syntax("10.1000/ab c"));
}

TEST_CASE("unicode suffix bytes survive normalization verbatim") {
    std::string raw = "10.1000/caf\xc3\xa9";  // UTF-8 e-acute
    CHECK(normalize_doi(raw).str() == raw);
}

TEST_CASE("normalize_doi is idempotent and produces valid DOIs") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> variant(0, 6);
    const char* prefixes[] = {"",
                              "doi:",
                              "DOI:",
                              "http://doi.org/",
                              "https://doi.org/",
                              "http://dx.doi.org/",
                              "https://dx.doi.org/"};

    for (int i = 0; i < 500; ++i) {
        std::string doi = testutil::random_doi(rng);
        std::string decorated = std::string(prefixes[variant(rng)]) + doi;
        // sprinkle uppercase
        for (char& c : decorated) {
            if (c >= 'a' && c <= 'z' && rng() % 3 == 0) c = static_cast<char>(c - 'a' + 'A');
        }
        Doi first = normalize_doi(decorated);
        Doi second = normalize_doi(first.str());
        CHECK(first == second);
        CHECK(is_valid_doi_syntax(first.str()));
    }
}

TEST_CASE("from_normalized refuses non-canonical strings") {
    CHECK(Doi::from_normalized("10.1000/abc").str() == "10.1000/abc");
    CHECK_THROWS_AS(Doi::from_normalized("DOI:10.1000/abc"), MalformedDoi);
}
