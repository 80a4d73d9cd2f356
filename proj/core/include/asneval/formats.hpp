#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asneval/analysis.hpp"
#include "asneval/model.hpp"
#include "asneval/pipeline.hpp"

namespace asneval {

// One roster line: who to evaluate and where their inputs live. Relative
// paths are resolved against the roster file's directory.
struct RosterEntry {
    std::string id;
    Role role = Role::AssociateProfessor;
    std::string name;
    std::optional<std::string> orcid;
    std::optional<int> first_pub_year;
    std::optional<std::filesystem::path> cv_text_path;
    std::optional<std::filesystem::path> cv_dois_path;
    std::optional<std::filesystem::path> dblp_dois_path;
};

// CSV with header; columns id, role, name required, the rest optional:
// orcid, first_pub_year, cv_text_path, cv_dois_path, dblp_dois_path.
std::vector<RosterEntry> load_roster(const std::filesystem::path& csv_path);

// One normalized DOI per line; blank lines and '#' comments are ignored.
// A malformed DOI is a data error naming the line.
std::set<Doi> read_doi_list(const std::filesystem::path& path);

void write_doi_list(const std::filesystem::path& path, const std::vector<Doi>& dois);

// Official (reference) outcomes. Columns: id, role, then either the pass
// flags (pass_a, pass_b, pass_c) or the indicator values (a, b, c). Records
// carrying only values need thresholds to derive flags; pass nullptr to
// require explicit flags.
std::vector<OfficialRecord> load_official_csv(const std::filesystem::path& path,
                                              const std::map<Role, ThresholdSet>* thresholds,
                                              ComparisonRule rule);

// Result rows as written by export_results(Csv).
std::vector<EvaluationRow> load_results_csv(const std::filesystem::path& path);

struct MaterializeOptions {
    double min_score = 0.7;        // DBLP match acceptance threshold
    bool accept_low_score = false; // take the best match even below min_score
};

struct MaterializeLog {
    std::vector<std::string> warnings;
    std::uint64_t dblp_publications_dropped_no_doi = 0;
};

// Turns a roster entry into an evaluable candidate: CV DOIs from the list
// file or extracted from the CV text, DBLP DOIs from the list file or (when
// a client is supplied) from a person search plus publication download.
// Low-score person matches are skipped with a warning unless accepted.
CandidateInput materialize_candidate(const RosterEntry& entry, DblpClient* dblp,
                                     const MaterializeOptions& options, MaterializeLog& log);

}  // namespace asneval
