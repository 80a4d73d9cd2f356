#pragma once

#include <filesystem>
#include <string>

#include "asneval/harvest/cache.hpp"
#include "asneval/util.hpp"

namespace testutil {

// A small, fully offline cohort: three candidates, a citation dump, a
// configuration file pointing at a local index, and a pre-warmed metadata
// cache. Endpoint base URLs point at an unroutable port so any accidental
// live fetch fails loudly.
struct CohortFixture {
    std::filesystem::path root;
    std::filesystem::path roster;
    std::filesystem::path config;
    std::filesystem::path dump_csv;
    std::filesystem::path index_dir;
    std::filesystem::path official;
};

inline CohortFixture make_cohort_fixture(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    using asneval::atomic_write_file;

    CohortFixture fixture;
    fixture.root = root;
    fs::create_directories(root);

    // --- citation dump (with one duplicate, one self-loop, one bad row)
    fixture.dump_csv = root / "dump.csv";
    atomic_write_file(fixture.dump_csv,
                      "oci,citing,cited,creation\n"
                      "1,10.9/x1,10.1/j1,2015-01-01\n"
                      "2,10.9/x2,10.1/j1,2015-02-01\n"
                      "3,10.9/x3,10.1/j1,2016-01-01\n"
                      "4,10.9/x1,10.1/j2,2014-01-01\n"
                      "5,10.9/x4,10.1/j2,2014-05-01\n"
                      "6,10.9/x2,10.1/j3,2013-01-01\n"
                      "7,10.9/x1,10.1/j4,2012-01-01\n"
                      "8,10.9/x2,10.1/j4,2012-02-01\n"
                      "9,10.9/x3,10.1/j4,2012-03-01\n"
                      "10,10.9/x4,10.1/j4,2012-04-01\n"
                      "11,10.9/x5,10.1/j4,2012-05-01\n"
                      "12,10.9/x1,10.1/n1,2011-01-01\n"
                      "13,10.9/x1,10.1/n3,2013-06-01\n"
                      "14,10.9/x2,10.1/n3,2013-07-01\n"
                      "15,10.9/x2,10.1/j4,2012-02-01\n"   // duplicate edge
                      "16,10.1/j1,10.1/j1,2015-01-01\n"   // self-loop
                      "17,not a doi,10.1/j1,2015-01-01\n");  // malformed

    // --- per-candidate DOI lists and one CV text
    atomic_write_file(root / "lists" / "c1.cv.txt", "10.1/j1\n10.1/j2\n10.1/n1\n");
    atomic_write_file(root / "lists" / "c1.dblp.txt", "10.1/j2\n10.1/j3\n10.1/n2\n");
    atomic_write_file(root / "cv" / "c2.txt",
                      "Publications of candidate two.\n"
                      "Journal article, doi:10.1/j4.\n"
                      "Workshop note: https://doi.org/10.1/n3,\n");
    atomic_write_file(root / "lists" / "c2.dblp.txt", "10.1/j4\n10.1/j5\n");
    atomic_write_file(root / "lists" / "c3.cv.txt", "10.1/j1\n10.1/n4\n");

    fixture.roster = root / "roster.csv";
    atomic_write_file(fixture.roster,
                      "id,role,name,orcid,first_pub_year,cv_text_path,cv_dois_path,dblp_dois_path\n"
                      "c1,full,Ada One,,2005,,lists/c1.cv.txt,lists/c1.dblp.txt\n"
                      "c2,associate,Ben Two,,,cv/c2.txt,,lists/c2.dblp.txt\n"
                      "c3,full,Cleo Three,,2010,,lists/c3.cv.txt,\n");

    // --- configuration: local dump, unroutable endpoints, no contact
    fixture.config = root / "config.ini";
    fixture.index_dir = root / "index";
    atomic_write_file(fixture.config,
                      "[thresholds.full]\n"
                      "a = 2\nb = 4\nc = 2\n"
                      "[thresholds.associate]\n"
                      "a = 2\nb = 5\nc = 2\n"
                      "[normalization]\n"
                      "strategy = none\n"
                      "reference_year = 2016\n"
                      "[harvest]\n"
                      "cache_root = cache\n"
                      "parallelism = 2\n"
                      "dblp_base = http://127.0.0.1:1\n"
                      "crossref_base = http://127.0.0.1:1\n"
                      "doiproxy_base = http://127.0.0.1:1\n"
                      "coci_base = http://127.0.0.1:1\n"
                      "[citations]\n"
                      "source = local-dump\n"
                      "index_path = index\n"
                      "[comparison]\n"
                      "rule = greater-equal\n");

    // --- warm metadata cache for every fixture DOI
    asneval::ResponseCache cache(root / "cache");
    auto warm = [&cache](const std::string& doi, const std::string& type, int year) {
        std::string body = "{\"message\":{\"DOI\":\"" + doi + "\",\"type\":\"" + type +
                           "\",\"issued\":{\"date-parts\":[[" + std::to_string(year) +
                           "]]},\"container-title\":[\"Venue\"]}}";
        cache.put("crossref", "/works/" + doi, 200, body, "2019-01-01T00:00:00Z");
    };
    warm("10.1/j1", "journal-article", 2006);
    warm("10.1/j2", "journal-article", 2008);
    warm("10.1/j3", "journal-article", 2012);
    warm("10.1/j4", "journal-article", 2010);
    warm("10.1/j5", "journal-article", 2011);
    warm("10.1/n1", "proceedings-article", 2009);
    warm("10.1/n2", "proceedings-article", 2013);
    warm("10.1/n3", "proceedings-article", 2012);
    warm("10.1/n4", "proceedings-article", 2014);

    fixture.official = root / "official.csv";
    atomic_write_file(fixture.official,
                      "id,role,pass_a,pass_b,pass_c,overall\n"
                      "c1,full,1,1,1,1\n"
                      "c2,associate,1,0,0,0\n"
                      "c3,full,0,0,1,0\n");
    return fixture;
}

}  // namespace testutil
