// asneval: open-data research-assessment toolkit.
//
// Harvests publication and citation data from open endpoints (DBLP, Crossref,
// the DOI proxy, the OpenCitations COCI index), computes the three ASN 2016
// bibliometric indicators per candidate under the CCV/CDBLP/CU conditions,
// evaluates them against role thresholds, and compares the outcomes with the
// official ones (agreement, flips, threshold sweeps).
//
// Exit codes: 0 success, 1 data/runtime error, 2 usage or configuration error.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asneval/config.hpp"
#include "asneval/doi_extract.hpp"
#include "asneval/errors.hpp"
#include "asneval/formats.hpp"
#include "asneval/harvest/stack.hpp"
#include "asneval/pipeline.hpp"
#include "asneval/report.hpp"
#include "asneval/util.hpp"

namespace fs = std::filesystem;
using namespace asneval;

namespace {

PipelineConfig load_config_or_default(const std::string& path) {
    if (path.empty()) {
        PipelineConfig config = default_config();
        apply_env_overrides(config);
        return config;
    }
    return load_config(path);
}

std::string role_title(Role role) {
    return role == Role::AssociateProfessor ? "Associate Professor" : "Full Professor";
}

// ---------------------------------------------------------------------------
// extract

int cmd_extract(const std::vector<std::string>& inputs, const std::string& out_dir) {
    fs::create_directories(out_dir);
    for (const std::string& input : inputs) {
        std::string text = read_file(input);  // IoError (exit 1) names the path
        ExtractionResult result = extract_dois(text);

        fs::path out = fs::path(out_dir) / (fs::path(input).stem().string() + ".dois.txt");
        write_doi_list(out, result.dois);

        std::cout << input << ": " << result.dois.size() << " DOIs";
        if (!result.rejected.empty()) {
            std::cout << " (" << result.rejected.size() << " rejected)";
        }
        std::cout << " -> " << out.string() << "\n";
        if (result.dois.empty()) {
            std::cerr << "warning: no DOIs found in " << input << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// harvest

int cmd_harvest(const std::string& roster_path, const std::string& cache_dir,
                const std::string& config_path, bool confirm_low_score,
                const std::string& out_dir) {
    PipelineConfig config = load_config_or_default(config_path);
    if (!cache_dir.empty()) config.harvest.cache_root = cache_dir;
    if (config.harvest.user_agent().empty()) {
        throw ConfigError(
            "harvesting needs a contact address: set [harvest] contact in the config "
            "or ASNEVAL_CONTACT");
    }

    auto roster = load_roster(roster_path);
    HarvestStack stack(config.harvest);
    MaterializeOptions options;
    options.accept_low_score = confirm_low_score;
    MaterializeLog log;

    std::size_t crossref_found = 0;
    std::size_t crossref_missing = 0;
    std::size_t crossref_failed = 0;
    std::size_t cv_resolving = 0;
    std::size_t cv_not_found = 0;
    std::size_t cv_transient = 0;
    std::size_t candidate_failures = 0;

    if (!out_dir.empty()) fs::create_directories(out_dir);

    for (const RosterEntry& entry : roster) {
        try {
            CandidateInput input = materialize_candidate(entry, &stack.dblp(), options, log);
            ConditionSets sets =
                build_condition_sets(input.candidate.cv_dois, input.candidate.dblp_dois);

            for (const Doi& doi : sets.cu) {
                try {
                    stack.crossref().work(doi);
                    ++crossref_found;
                } catch (const NotFound&) {
                    ++crossref_missing;
                } catch (const Error&) {
                    ++crossref_failed;
                }
            }
            for (const Doi& doi : input.candidate.cv_dois) {
                switch (stack.doi_proxy().resolve(doi).kind) {
                    case ResolutionStatus::Kind::Resolves: ++cv_resolving; break;
                    case ResolutionStatus::Kind::NotFound: ++cv_not_found; break;
                    case ResolutionStatus::Kind::TransientFailure: ++cv_transient; break;
                }
            }
            if (config.citations.kind == CitationSourceConfig::Kind::RestIndex) {
                for (const Doi& doi : sets.cu) stack.coci().citations(doi);
            }

            if (!out_dir.empty() && !entry.dblp_dois_path && !input.candidate.dblp_dois.empty()) {
                std::vector<Doi> sorted(input.candidate.dblp_dois.begin(),
                                        input.candidate.dblp_dois.end());
                write_doi_list(fs::path(out_dir) / (entry.id + ".dblp.txt"), sorted);
            }

            std::cout << entry.id << ": cv=" << input.candidate.cv_dois.size()
                      << " dblp=" << input.candidate.dblp_dois.size()
                      << " union=" << sets.cu.size() << "\n";
        } catch (const Error& e) {
            ++candidate_failures;
            std::cerr << "warning: candidate '" << entry.id << "': " << e.what() << "\n";
        }
    }

    for (const std::string& warning : log.warnings) std::cerr << "warning: " << warning << "\n";
    std::cout << "crossref: found=" << crossref_found << " missing=" << crossref_missing
              << " failed=" << crossref_failed << "\n";
    std::cout << "doi proxy (cv DOIs): resolving=" << cv_resolving
              << " not-found=" << cv_not_found << " transient=" << cv_transient << "\n";
    std::cout << "dblp publications without DOI: " << log.dblp_publications_dropped_no_doi
              << "\n";
    if (candidate_failures > 0) {
        std::cout << "candidates with harvest failures: " << candidate_failures << "\n";
    }
    for (const auto& endpoint : stack.stats()) {
        std::cout << "endpoint " << endpoint.name << ": requests=" << endpoint.stats.requests
                  << " cache_hits=" << endpoint.stats.cache_hits
                  << " transient_failures=" << endpoint.stats.transient_failures << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// index build

int cmd_index_build(const std::string& csv_path, const std::string& out_dir,
                    const std::string& citing_col, const std::string& cited_col) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw IoError("cannot open citation dump: " + csv_path);

    CitationIndexBuilder builder;
    CitationCsvColumns columns;
    columns.citing = citing_col;
    columns.cited = cited_col;
    IndexBuildReport report = builder.ingest_csv(in, columns);
    builder.save(out_dir);

    std::cout << "rows_read:          " << report.rows_read << "\n"
              << "edges_kept:         " << report.edges_kept << "\n"
              << "duplicates_dropped: " << report.duplicates_dropped << "\n"
              << "self_loops_dropped: " << report.self_loops_dropped << "\n"
              << "malformed_dropped:  " << report.malformed_dropped << "\n"
              << "distinct_dois:      " << report.distinct_dois << "\n"
              << "index written to:   " << out_dir << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// run

int cmd_run(const std::string& roster_path, const std::string& config_path,
            const std::string& out_dir) {
    PipelineConfig config = load_config(config_path);  // required file
    auto roster = load_roster(roster_path);

    HarvestStack stack(config.harvest);

    CitationIndex index;
    std::unique_ptr<CitationSource> citations;
    if (config.citations.kind == CitationSourceConfig::Kind::LocalDump) {
        if (config.citations.dump_index_path.empty()) {
            throw ConfigError("[citations] source=local-dump requires index_path");
        }
        index = CitationIndex::load(config.citations.dump_index_path);
        citations = std::make_unique<IndexCitationSource>(index);
    } else {
        citations = std::make_unique<RestCitationSource>(stack.coci());
    }
    CrossrefMetadataSource metadata(stack.crossref());

    MaterializeOptions options;
    MaterializeLog log;
    std::vector<CandidateInput> cohort;
    cohort.reserve(roster.size());
    for (const RosterEntry& entry : roster) {
        cohort.push_back(materialize_candidate(entry, &stack.dblp(), options, log));
    }

    CohortResult result = run_cohort(cohort, config, *citations, &metadata);

    fs::create_directories(out_dir);
    atomic_write_file(fs::path(out_dir) / "results.csv",
                      export_results(result, ExportFormat::Csv));
    atomic_write_file(fs::path(out_dir) / "results.json",
                      export_results(result, ExportFormat::Json));

    std::ostringstream report;
    report << "candidates: " << cohort.size() << "\n"
           << "result rows: " << result.rows.size() << "\n"
           << "publications_total: " << result.counters.publications_total << "\n"
           << "venue_unknown: " << result.counters.venue_unknown << "\n"
           << "age_from_first_pub: " << result.counters.age_from_first_pub << "\n"
           << "age_from_min_year: " << result.counters.age_from_min_year << "\n"
           << "age_defaulted: " << result.counters.age_defaulted << "\n"
           << "crossref_lookup_failures: " << metadata.lookup_failures() << "\n"
           << "dblp_publications_without_doi: " << log.dblp_publications_dropped_no_doi << "\n";
    for (const auto& endpoint : stack.stats()) {
        report << "endpoint " << endpoint.name << ": requests=" << endpoint.stats.requests
               << " cache_hits=" << endpoint.stats.cache_hits
               << " transient_failures=" << endpoint.stats.transient_failures << "\n";
    }
    report << "warnings: " << log.warnings.size() << "\n";
    for (const std::string& warning : log.warnings) report << "  " << warning << "\n";
    atomic_write_file(fs::path(out_dir) / "run_report.txt", report.str());

    std::cout << "wrote " << (fs::path(out_dir) / "results.csv").string() << " ("
              << result.rows.size() << " rows)\n";
    for (const std::string& warning : log.warnings) std::cerr << "warning: " << warning << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// agree / flips / sweep shared loading

struct ComparisonInputs {
    // role -> evaluations/records, restricted to matched candidates when the
    // drop policy asks for it
    std::map<Role, std::vector<CandidateEvaluation>> open;
    std::map<Role, std::vector<std::pair<std::string, IndicatorTriple>>> open_triples;
    std::map<Role, std::vector<OfficialRecord>> official;
    std::size_t dropped_open = 0;
    std::size_t dropped_official = 0;
};

ComparisonInputs load_comparison(const std::string& open_path, const std::string& official_path,
                                 const PipelineConfig& config, bool drop_unmatched,
                                 Condition triple_condition) {
    auto rows = load_results_csv(open_path);
    auto officials =
        load_official_csv(official_path, &config.thresholds, config.comparison);

    std::map<std::string, Role> open_roles;
    std::set<std::string> open_ids;
    for (const EvaluationRow& row : rows) {
        open_ids.insert(row.candidate_id);
        auto [it, fresh] = open_roles.try_emplace(row.candidate_id, row.role);
        if (!fresh && it->second != row.role) {
            throw Error("candidate '" + row.candidate_id + "' has two roles in " + open_path);
        }
    }
    std::set<std::string> official_ids;
    for (const OfficialRecord& rec : officials) {
        official_ids.insert(rec.candidate_id);
        auto it = open_roles.find(rec.candidate_id);
        if (it != open_roles.end() && it->second != rec.role) {
            throw UnmatchedCandidate("candidate '" + rec.candidate_id +
                                     "' has different roles in the open and official files");
        }
    }

    ComparisonInputs inputs;
    std::set<std::string> matched;
    for (const std::string& id : open_ids) {
        if (official_ids.contains(id)) {
            matched.insert(id);
        } else if (!drop_unmatched) {
            throw UnmatchedCandidate("candidate '" + id + "' has no official record");
        } else {
            ++inputs.dropped_open;
        }
    }
    for (const std::string& id : official_ids) {
        if (!matched.contains(id)) {
            if (!drop_unmatched) {
                throw UnmatchedCandidate("official record '" + id + "' has no open evaluation");
            }
            ++inputs.dropped_official;
        }
    }

    for (const EvaluationRow& row : rows) {
        if (!matched.contains(row.candidate_id)) continue;
        CandidateEvaluation eval;
        eval.candidate_id = row.candidate_id;
        eval.condition = row.condition;
        eval.triple = row.triple;
        eval.outcome = row.outcome;
        inputs.open[row.role].push_back(std::move(eval));
        if (row.condition == triple_condition) {
            inputs.open_triples[row.role].emplace_back(row.candidate_id, row.triple);
        }
    }
    for (const OfficialRecord& rec : officials) {
        if (matched.contains(rec.candidate_id)) inputs.official[rec.role].push_back(rec);
    }
    return inputs;
}

int cmd_agree_or_flips(bool flips, const std::string& open_path,
                       const std::string& official_path, const std::string& config_path,
                       bool drop_unmatched, const std::string& out_dir) {
    PipelineConfig config = load_config_or_default(config_path);
    ComparisonInputs inputs = load_comparison(open_path, official_path, config, drop_unmatched,
                                              Condition::CU);

    if (inputs.dropped_open + inputs.dropped_official > 0) {
        std::cerr << "warning: dropped " << inputs.dropped_open << " open / "
                  << inputs.dropped_official << " official unmatched candidates\n";
    }
    if (!out_dir.empty()) fs::create_directories(out_dir);

    for (Role role : {Role::AssociateProfessor, Role::FullProfessor}) {
        auto open_it = inputs.open.find(role);
        if (open_it == inputs.open.end()) continue;

        if (flips) {
            FlipReport report = flip_table(open_it->second, inputs.official[role]);
            std::cout << render_flip_table(report, role_title(role)) << "\n";
            if (!out_dir.empty()) {
                atomic_write_file(fs::path(out_dir) /
                                      ("flips_" + std::string(role_name(role)) + ".csv"),
                                  flip_csv(report));
            }
        } else {
            AgreementReport report = agreement_table(open_it->second, inputs.official[role]);
            std::cout << render_agreement_table(report, role_title(role)) << "\n";
            if (!out_dir.empty()) {
                atomic_write_file(fs::path(out_dir) /
                                      ("agreement_" + std::string(role_name(role)) + ".csv"),
                                  agreement_csv(report));
            }
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sweep

std::vector<double> parse_ratio_grid(const std::string& spec) {
    auto parts = split(spec, ':');
    auto value = [&](const std::string& s) {
        auto v = parse_double(s);
        if (!v) throw InvalidRatio("bad ratio value '" + s + "' in '" + spec + "'");
        return *v;
    };
    std::vector<double> ratios;
    if (parts.size() == 1) {
        ratios.push_back(value(parts[0]));
        return ratios;
    }
    if (parts.size() != 3) {
        throw InvalidRatio("ratio grid must be <start:stop:step> or a single value, got '" +
                           spec + "'");
    }
    double start = value(parts[0]);
    double stop = value(parts[1]);
    double step = value(parts[2]);
    if (step <= 0 || stop < start) {
        throw InvalidRatio("ratio grid must satisfy start <= stop and step > 0");
    }
    for (double r = start; r <= stop + step * 1e-9; r += step) {
        ratios.push_back(std::round(r * 1e9) / 1e9);  // keep 0.85 from drifting
    }
    return ratios;
}

int cmd_sweep(const std::string& open_path, const std::string& official_path,
              const std::string& config_path, const std::string& ratio_spec,
              const std::string& condition_name_arg, bool svg, bool drop_unmatched,
              const std::string& out_dir) {
    PipelineConfig config = load_config_or_default(config_path);
    Condition condition = parse_condition(condition_name_arg);
    std::vector<double> ratios = parse_ratio_grid(ratio_spec);

    ComparisonInputs inputs =
        load_comparison(open_path, official_path, config, drop_unmatched, condition);
    fs::create_directories(out_dir);

    for (Role role : {Role::AssociateProfessor, Role::FullProfessor}) {
        auto open_it = inputs.open_triples.find(role);
        if (open_it == inputs.open_triples.end()) continue;
        auto thresholds_it = config.thresholds.find(role);
        if (thresholds_it == config.thresholds.end()) {
            throw ConfigError("no thresholds configured for role '" +
                              std::string(role_name(role)) + "'");
        }

        SweepSeries series = threshold_sweep(open_it->second, inputs.official[role],
                                             thresholds_it->second, ratios, config.comparison);

        std::string stem =
            "sweep_" + std::string(role_name(role)) + "_" +
            to_lower_ascii(std::string(condition_name(condition)));
        atomic_write_file(fs::path(out_dir) / (stem + ".csv"), sweep_csv(series));
        std::string title = role_title(role) + std::string(" / ") +
                            std::string(condition_name(condition));
        if (svg) {
            atomic_write_file(fs::path(out_dir) / (stem + ".svg"), sweep_svg(series, title));
        }

        std::cout << title << " (" << series.cohort_size << " candidates)\n";
        for (std::size_t i = 0; i < series.ratios.size(); ++i) {
            const ThresholdSet& t = series.scaled_thresholds[i];
            std::cout << "ratio " << format_pct(series.ratios[i] * 100) << "%: thresholds a="
                      << t.t_a << " b=" << t.t_b << " c=" << t.t_c;
            for (Metric m : kAllMetrics) {
                std::cout << "  " << metric_name(m) << "=" << format_pct(series.pct(m, i)) << "%";
            }
            std::cout << "\n";
        }
        std::cout << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// stats

int cmd_stats(const std::string& roster_path, const std::string& out_csv) {
    auto roster = load_roster(roster_path);
    MaterializeOptions options;
    MaterializeLog log;
    std::vector<Candidate> candidates;
    candidates.reserve(roster.size());
    for (const RosterEntry& entry : roster) {
        // file-backed sets only; harvesting is a separate step
        candidates.push_back(materialize_candidate(entry, nullptr, options, log).candidate);
    }
    DatasetStats stats = dataset_stats(candidates);
    std::cout << render_stats_table(stats);
    if (!out_csv.empty()) atomic_write_file(out_csv, stats_csv(stats));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"asneval: evaluate research qualification indicators from open data"};
    app.require_subcommand(1);
    int exit_code = 0;

    // extract
    std::vector<std::string> extract_inputs;
    std::string extract_out;
    auto* extract = app.add_subcommand("extract", "Extract DOIs from plain-text CVs");
    extract->add_option("--in", extract_inputs, "Input text files")->required()->expected(-1);
    extract->add_option("--out", extract_out, "Output directory (one .dois.txt per input)")
        ->required();
    extract->callback([&] { exit_code = cmd_extract(extract_inputs, extract_out); });

    // harvest
    std::string harvest_roster, harvest_cache, harvest_config, harvest_out;
    bool harvest_confirm = false;
    auto* harvest =
        app.add_subcommand("harvest", "Warm the metadata caches for a candidate roster");
    harvest->add_option("--roster", harvest_roster, "Roster CSV")->required();
    harvest->add_option("--cache", harvest_cache, "Cache directory (overrides config)");
    harvest->add_option("--config", harvest_config, "Configuration file");
    harvest->add_option("--out", harvest_out, "Directory for harvested DBLP DOI lists");
    harvest->add_flag("--confirm-low-score", harvest_confirm,
                      "Accept DBLP person matches below the score threshold");
    harvest->callback([&] {
        exit_code = cmd_harvest(harvest_roster, harvest_cache, harvest_config, harvest_confirm,
                                harvest_out);
    });

    // index build
    auto* index = app.add_subcommand("index", "Local citation index operations");
    index->require_subcommand(1);
    std::string index_csv, index_out, citing_col = "citing", cited_col = "cited";
    auto* index_build =
        index->add_subcommand("build", "Ingest a DOI-to-DOI citation CSV dump");
    index_build->add_option("--csv", index_csv, "Citation dump CSV")->required();
    index_build->add_option("--out", index_out, "Index output directory")->required();
    index_build->add_option("--citing-col", citing_col, "Citing DOI column name");
    index_build->add_option("--cited-col", cited_col, "Cited DOI column name");
    index_build->callback(
        [&] { exit_code = cmd_index_build(index_csv, index_out, citing_col, cited_col); });

    // run
    std::string run_roster, run_config, run_out;
    auto* run = app.add_subcommand("run", "Evaluate a roster under all three conditions");
    run->add_option("--roster", run_roster, "Roster CSV")->required();
    run->add_option("--config", run_config, "Configuration file")->required();
    run->add_option("--out", run_out, "Output directory")->required();
    run->callback([&] { exit_code = cmd_run(run_roster, run_config, run_out); });

    // agree / flips
    std::string cmp_open, cmp_official, cmp_config, cmp_out;
    bool cmp_drop = false;
    auto* agree = app.add_subcommand("agree", "Agreement between open and official outcomes");
    agree->add_option("--open", cmp_open, "Results CSV from `run`")->required();
    agree->add_option("--official", cmp_official, "Official outcomes CSV")->required();
    agree->add_option("--config", cmp_config, "Configuration file (for deriving flags)");
    agree->add_option("--out", cmp_out, "Directory for per-role report CSVs");
    agree->add_flag("--drop-unmatched", cmp_drop, "Drop candidates present on one side only");
    agree->callback([&] {
        exit_code =
            cmd_agree_or_flips(false, cmp_open, cmp_official, cmp_config, cmp_drop, cmp_out);
    });

    std::string flips_open, flips_official, flips_config, flips_out;
    bool flips_drop = false;
    auto* flips = app.add_subcommand("flips", "Cross-direction flips ('+' and '-')");
    flips->add_option("--open", flips_open, "Results CSV from `run`")->required();
    flips->add_option("--official", flips_official, "Official outcomes CSV")->required();
    flips->add_option("--config", flips_config, "Configuration file (for deriving flags)");
    flips->add_option("--out", flips_out, "Directory for per-role report CSVs");
    flips->add_flag("--drop-unmatched", flips_drop, "Drop candidates present on one side only");
    flips->callback([&] {
        exit_code = cmd_agree_or_flips(true, flips_open, flips_official, flips_config,
                                       flips_drop, flips_out);
    });

    // sweep
    std::string sweep_open, sweep_official, sweep_config, sweep_ratios = "0.5:1.0:0.05";
    std::string sweep_condition = "cdblp", sweep_out = ".";
    bool sweep_svg_flag = false, sweep_drop = false;
    auto* sweep = app.add_subcommand("sweep", "Agreement across scaled open-data thresholds");
    sweep->add_option("--open", sweep_open, "Results CSV from `run`")->required();
    sweep->add_option("--official", sweep_official, "Official outcomes CSV")->required();
    sweep->add_option("--config", sweep_config, "Configuration file");
    sweep->add_option("--ratios", sweep_ratios, "Ratio grid <start:stop:step> or single value");
    sweep->add_option("--condition", sweep_condition, "Condition to sweep (ccv|cdblp|cu)");
    sweep->add_option("--out", sweep_out, "Output directory");
    sweep->add_flag("--svg", sweep_svg_flag, "Also write an SVG line chart");
    sweep->add_flag("--drop-unmatched", sweep_drop, "Drop candidates present on one side only");
    sweep->callback([&] {
        exit_code = cmd_sweep(sweep_open, sweep_official, sweep_config, sweep_ratios,
                              sweep_condition, sweep_svg_flag, sweep_drop, sweep_out);
    });

    // stats
    std::string stats_roster, stats_out;
    auto* stats = app.add_subcommand("stats", "Dataset statistics for a roster");
    stats->add_option("--roster", stats_roster, "Roster CSV")->required();
    stats->add_option("--out", stats_out, "Write the table as CSV to this path");
    stats->callback([&] { exit_code = cmd_stats(stats_roster, stats_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidRatio& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
