#include "asneval/formats.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "asneval/csv.hpp"
#include "asneval/doi_extract.hpp"
#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

namespace {

std::map<std::string, std::size_t> header_map(const std::vector<std::string>& header) {
    std::map<std::string, std::size_t> map;
    for (std::size_t i = 0; i < header.size(); ++i) {
        map[std::string(trim(header[i]))] = i;
    }
    return map;
}

std::optional<std::string> field(const std::vector<std::string>& row,
                                 const std::map<std::string, std::size_t>& header,
                                 const std::string& name) {
    auto it = header.find(name);
    if (it == header.end() || it->second >= row.size()) return std::nullopt;
    std::string value(trim(row[it->second]));
    if (value.empty()) return std::nullopt;
    return value;
}

std::string require_field(const std::vector<std::string>& row,
                          const std::map<std::string, std::size_t>& header,
                          const std::string& name, std::size_t line) {
    auto value = field(row, header, name);
    if (!value) {
        throw Error("line " + std::to_string(line) + ": missing required field '" + name + "'");
    }
    return *value;
}

bool parse_bool(const std::string& s, std::size_t line, const std::string& name) {
    std::string v = to_lower_ascii(trim(s));
    if (v == "1" || v == "true" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "no") return false;
    throw Error("line " + std::to_string(line) + ": field '" + name + "' is not a boolean: '" +
                s + "'");
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
    std::filesystem::path p(value);
    if (p.is_absolute()) return p;
    return base / p;
}

}  // namespace

std::vector<RosterEntry> load_roster(const std::filesystem::path& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw IoError("cannot open roster: " + csv_path.string());
    std::filesystem::path base = csv_path.parent_path();

    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next_row(row)) throw Error("roster is empty: " + csv_path.string());
    auto header = header_map(row);
    for (const char* required : {"id", "role", "name"}) {
        if (!header.contains(required)) throw MissingColumn(required);
    }

    std::vector<RosterEntry> roster;
    std::set<std::string> seen_ids;
    while (reader.next_row(row)) {
        std::size_t line = reader.row_line();
        RosterEntry entry;
        entry.id = require_field(row, header, "id", line);
        entry.role = parse_role(require_field(row, header, "role", line));
        entry.name = require_field(row, header, "name", line);
        entry.orcid = field(row, header, "orcid");
        if (auto year = field(row, header, "first_pub_year")) {
            auto parsed = parse_int(*year);
            if (!parsed) {
                throw Error("line " + std::to_string(line) + ": bad first_pub_year '" + *year +
                            "'");
            }
            entry.first_pub_year = static_cast<int>(*parsed);
        }
        if (auto p = field(row, header, "cv_text_path")) entry.cv_text_path = resolve(base, *p);
        if (auto p = field(row, header, "cv_dois_path")) entry.cv_dois_path = resolve(base, *p);
        if (auto p = field(row, header, "dblp_dois_path")) {
            entry.dblp_dois_path = resolve(base, *p);
        }
        if (!seen_ids.insert(entry.id).second) {
            throw Error("line " + std::to_string(line) + ": duplicate candidate id '" + entry.id +
                        "'");
        }
        roster.push_back(std::move(entry));
    }
    return roster;
}

std::set<Doi> read_doi_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open DOI list: " + path.string());

    std::set<Doi> dois;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#') continue;
        try {
            dois.insert(normalize_doi(s));
        } catch (const MalformedDoi& e) {
            throw Error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return dois;
}

void write_doi_list(const std::filesystem::path& path, const std::vector<Doi>& dois) {
    std::string content;
    for (const Doi& doi : dois) {
        content += doi.str();
        content += '\n';
    }
    atomic_write_file(path, content);
}

std::vector<OfficialRecord> load_official_csv(const std::filesystem::path& path,
                                              const std::map<Role, ThresholdSet>* thresholds,
                                              ComparisonRule rule) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open official records: " + path.string());

    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next_row(row)) throw Error("official file is empty: " + path.string());
    auto header = header_map(row);
    for (const char* required : {"id", "role"}) {
        if (!header.contains(required)) throw MissingColumn(required);
    }
    bool has_flags = header.contains("pass_a") && header.contains("pass_b") &&
                     header.contains("pass_c");
    bool has_triple = header.contains("a") && header.contains("b") && header.contains("c");
    if (!has_flags && !has_triple) {
        throw Error("official file needs either pass_a/pass_b/pass_c or a/b/c columns: " +
                    path.string());
    }

    std::vector<OfficialRecord> records;
    std::set<std::string> seen_ids;
    while (reader.next_row(row)) {
        std::size_t line = reader.row_line();
        OfficialRecord rec;
        rec.candidate_id = require_field(row, header, "id", line);
        rec.role = parse_role(require_field(row, header, "role", line));

        if (has_triple) {
            auto read_value = [&](const char* name) {
                auto text = require_field(row, header, name, line);
                auto value = parse_double(text);
                if (!value) {
                    throw Error("line " + std::to_string(line) + ": bad indicator value '" +
                                text + "'");
                }
                return *value;
            };
            rec.triple = make_indicator_triple(read_value("a"), read_value("b"), read_value("c"));
        }

        if (has_flags) {
            bool pa = parse_bool(require_field(row, header, "pass_a", line), line, "pass_a");
            bool pb = parse_bool(require_field(row, header, "pass_b", line), line, "pass_b");
            bool pc = parse_bool(require_field(row, header, "pass_c", line), line, "pass_c");
            rec.outcome = EvaluationOutcome::from_flags(pa, pb, pc);
            if (auto overall = field(row, header, "overall")) {
                if (parse_bool(*overall, line, "overall") != rec.outcome.overall) {
                    throw Error("line " + std::to_string(line) +
                                ": overall flag contradicts the two-of-three rule");
                }
            }
        } else {
            if (!thresholds) {
                throw ConfigError("official file '" + path.string() +
                                  "' provides indicator values only; thresholds are required "
                                  "to derive pass flags");
            }
            auto it = thresholds->find(rec.role);
            if (it == thresholds->end()) {
                throw ConfigError("no thresholds configured for role '" +
                                  std::string(role_name(rec.role)) + "'");
            }
            rec.outcome = evaluate(*rec.triple, it->second, rule);
        }

        if (!seen_ids.insert(rec.candidate_id).second) {
            throw Error("line " + std::to_string(line) + ": duplicate candidate id '" +
                        rec.candidate_id + "'");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<EvaluationRow> load_results_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open results: " + path.string());

    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next_row(row)) throw Error("results file is empty: " + path.string());
    auto header = header_map(row);
    for (const char* required :
         {"candidate_id", "condition", "role", "a", "b", "c", "pass_a", "pass_b", "pass_c"}) {
        if (!header.contains(required)) throw MissingColumn(required);
    }

    std::vector<EvaluationRow> rows;
    while (reader.next_row(row)) {
        std::size_t line = reader.row_line();
        EvaluationRow r;
        r.candidate_id = require_field(row, header, "candidate_id", line);
        r.condition = parse_condition(require_field(row, header, "condition", line));
        r.role = parse_role(require_field(row, header, "role", line));
        auto read_value = [&](const char* name) {
            auto text = require_field(row, header, name, line);
            auto value = parse_double(text);
            if (!value) {
                throw Error("line " + std::to_string(line) + ": bad indicator value '" + text +
                            "'");
            }
            return *value;
        };
        r.triple = make_indicator_triple(read_value("a"), read_value("b"), read_value("c"));
        bool pa = parse_bool(require_field(row, header, "pass_a", line), line, "pass_a");
        bool pb = parse_bool(require_field(row, header, "pass_b", line), line, "pass_b");
        bool pc = parse_bool(require_field(row, header, "pass_c", line), line, "pass_c");
        r.outcome = EvaluationOutcome::from_flags(pa, pb, pc);
        if (auto overall = field(row, header, "overall")) {
            if (parse_bool(*overall, line, "overall") != r.outcome.overall) {
                throw Error("line " + std::to_string(line) +
                            ": overall flag contradicts the two-of-three rule");
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

CandidateInput materialize_candidate(const RosterEntry& entry, DblpClient* dblp,
                                     const MaterializeOptions& options, MaterializeLog& log) {
    CandidateInput input;
    input.candidate.id = entry.id;
    input.candidate.role = entry.role;
    input.candidate.name = entry.name;
    input.candidate.orcid = entry.orcid;
    input.candidate.first_pub_year = entry.first_pub_year;

    if (entry.cv_dois_path) {
        input.candidate.cv_dois = read_doi_list(*entry.cv_dois_path);
    } else if (entry.cv_text_path) {
        auto extracted = extract_dois(read_file(*entry.cv_text_path));
        input.candidate.cv_dois.insert(extracted.dois.begin(), extracted.dois.end());
    }

    if (entry.dblp_dois_path) {
        input.candidate.dblp_dois = read_doi_list(*entry.dblp_dois_path);
    } else if (dblp) {
        try {
            auto matches = dblp->search_person(entry.name, entry.orcid);
            if (matches.empty()) {
                log.warnings.push_back("candidate '" + entry.id + "': no DBLP person matches '" +
                                       entry.name + "'");
            } else if (matches.front().score < options.min_score && !options.accept_low_score) {
                log.warnings.push_back("candidate '" + entry.id + "': best DBLP match '" +
                                       matches.front().display_name + "' scored " +
                                       format_double(matches.front().score) +
                                       " (below " + format_double(options.min_score) +
                                       "); skipped without explicit confirmation");
            } else {
                auto list = dblp->publications(matches.front().source_person_id);
                log.dblp_publications_dropped_no_doi += list.dropped_no_doi;
                for (WorkMetadata& work : list.works) {
                    input.candidate.dblp_dois.insert(work.doi);
                    input.dblp_works.emplace(work.doi, std::move(work));
                }
            }
        } catch (const Error& e) {
            // an unreachable or unconfigured endpoint costs one source, not
            // the whole cohort
            log.warnings.push_back("candidate '" + entry.id + "': DBLP harvest failed: " +
                                   e.what());
        }
    }
    return input;
}

}  // namespace asneval
