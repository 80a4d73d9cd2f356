#include "asneval/config.hpp"

#include <cstdlib>
#include <set>

#include "asneval/errors.hpp"
#include "asneval/ini.hpp"
#include "asneval/util.hpp"

namespace asneval {

namespace {

unsigned parse_threshold(const IniFile& ini, const std::string& section, const std::string& key) {
    auto value = ini.get(section, key);
    if (!value) throw ConfigError("[" + section + "] is missing '" + key + "'");
    auto parsed = parse_int(*value);
    if (!parsed || *parsed < 0) {
        throw ConfigError("[" + section + "] " + key + " must be a non-negative integer, got '" +
                          *value + "'");
    }
    return static_cast<unsigned>(*parsed);
}

long long parse_positive(const std::string& section, const std::string& key,
                         const std::string& value) {
    auto parsed = parse_int(value);
    if (!parsed || *parsed <= 0) {
        throw ConfigError("[" + section + "] " + key + " must be a positive integer, got '" +
                          value + "'");
    }
    return *parsed;
}

void reject_unknown_keys(const IniFile& ini, const std::string& section,
                         const std::set<std::string>& known) {
    auto it = ini.sections().find(section);
    if (it == ini.sections().end()) return;
    for (const auto& [key, _] : it->second) {
        if (!known.contains(key)) {
            throw ConfigError("[" + section + "] has unknown key '" + key + "'");
        }
    }
}

}  // namespace

PipelineConfig default_config() {
    PipelineConfig config;
    config.reference_year = 2016;
    config.normalization = NormalizationStrategy::none();
    config.thresholds[Role::FullProfessor] = ThresholdSet{Role::FullProfessor, 8, 216, 8};
    config.thresholds[Role::AssociateProfessor] =
        ThresholdSet{Role::AssociateProfessor, 5, 118, 6};
    config.comparison = ComparisonRule::GreaterEqual;
    config.citations.kind = CitationSourceConfig::Kind::LocalDump;
    return config;
}

PipelineConfig parse_config(std::string_view text, const std::string& source_name) {
    IniFile ini = IniFile::parse(text, source_name);

    static const std::set<std::string> known_sections = {
        "thresholds.full", "thresholds.associate", "normalization",
        "harvest",         "citations",            "comparison"};
    for (const auto& [section, _] : ini.sections()) {
        if (!known_sections.contains(section)) {
            throw ConfigError(source_name + ": unknown section [" + section + "]");
        }
    }

    PipelineConfig config = default_config();
    config.thresholds.clear();

    bool any_thresholds = false;
    if (ini.has_section("thresholds.full")) {
        reject_unknown_keys(ini, "thresholds.full", {"a", "b", "c"});
        config.thresholds[Role::FullProfessor] =
            ThresholdSet{Role::FullProfessor, parse_threshold(ini, "thresholds.full", "a"),
                         parse_threshold(ini, "thresholds.full", "b"),
                         parse_threshold(ini, "thresholds.full", "c")};
        any_thresholds = true;
    }
    if (ini.has_section("thresholds.associate")) {
        reject_unknown_keys(ini, "thresholds.associate", {"a", "b", "c"});
        config.thresholds[Role::AssociateProfessor] = ThresholdSet{
            Role::AssociateProfessor, parse_threshold(ini, "thresholds.associate", "a"),
            parse_threshold(ini, "thresholds.associate", "b"),
            parse_threshold(ini, "thresholds.associate", "c")};
        any_thresholds = true;
    }
    if (!any_thresholds) {
        throw ConfigError(source_name + ": at least one [thresholds.*] section is required");
    }

    reject_unknown_keys(ini, "normalization", {"strategy", "window_years", "reference_year"});
    std::string strategy = to_lower_ascii(ini.get_or("normalization", "strategy", "none"));
    if (strategy == "none") {
        config.normalization = NormalizationStrategy::none();
    } else if (strategy == "per-year" || strategy == "per_year") {
        config.normalization = NormalizationStrategy::per_year();
    } else if (strategy == "window") {
        auto years = ini.get("normalization", "window_years");
        if (!years) {
            throw ConfigError("[normalization] strategy=window requires window_years");
        }
        config.normalization = NormalizationStrategy::window(
            static_cast<int>(parse_positive("normalization", "window_years", *years)));
    } else {
        throw ConfigError("[normalization] unknown strategy '" + strategy + "'");
    }
    if (auto year = ini.get("normalization", "reference_year")) {
        config.reference_year =
            static_cast<int>(parse_positive("normalization", "reference_year", *year));
    }

    reject_unknown_keys(ini, "harvest",
                        {"cache_root", "contact", "rate_limit_per_sec", "max_retries",
                         "max_in_flight", "parallelism", "dblp_base", "crossref_base",
                         "doiproxy_base", "coci_base"});
    if (auto v = ini.get("harvest", "cache_root")) config.harvest.cache_root = *v;
    if (auto v = ini.get("harvest", "contact")) config.harvest.contact = *v;
    if (auto v = ini.get("harvest", "rate_limit_per_sec")) {
        config.harvest.rate_limit_per_sec =
            static_cast<std::size_t>(parse_positive("harvest", "rate_limit_per_sec", *v));
    }
    if (auto v = ini.get("harvest", "max_retries")) {
        auto parsed = parse_int(*v);
        if (!parsed || *parsed < 0) {
            throw ConfigError("[harvest] max_retries must be a non-negative integer");
        }
        config.harvest.max_retries = static_cast<int>(*parsed);
    }
    if (auto v = ini.get("harvest", "max_in_flight")) {
        config.harvest.max_in_flight =
            static_cast<std::size_t>(parse_positive("harvest", "max_in_flight", *v));
    }
    if (auto v = ini.get("harvest", "parallelism")) {
        config.parallelism = static_cast<std::size_t>(parse_positive("harvest", "parallelism", *v));
    }
    if (auto v = ini.get("harvest", "dblp_base")) config.harvest.dblp_base = *v;
    if (auto v = ini.get("harvest", "crossref_base")) config.harvest.crossref_base = *v;
    if (auto v = ini.get("harvest", "doiproxy_base")) config.harvest.doiproxy_base = *v;
    if (auto v = ini.get("harvest", "coci_base")) config.harvest.coci_base = *v;

    reject_unknown_keys(ini, "citations", {"source", "index_path"});
    std::string source = to_lower_ascii(ini.get_or("citations", "source", "local-dump"));
    if (source == "local-dump" || source == "local_dump") {
        config.citations.kind = CitationSourceConfig::Kind::LocalDump;
    } else if (source == "rest-index" || source == "rest_index") {
        config.citations.kind = CitationSourceConfig::Kind::RestIndex;
    } else {
        throw ConfigError("[citations] unknown source '" + source + "'");
    }
    if (auto v = ini.get("citations", "index_path")) config.citations.dump_index_path = *v;

    reject_unknown_keys(ini, "comparison", {"rule", "table2_as_printed"});
    std::string rule = to_lower_ascii(ini.get_or("comparison", "rule", "greater-equal"));
    if (rule == "greater-equal" || rule == "greater_equal" || rule == ">=") {
        config.comparison = ComparisonRule::GreaterEqual;
    } else if (rule == "strictly-greater" || rule == "strictly_greater" || rule == ">") {
        config.comparison = ComparisonRule::StrictlyGreater;
    } else {
        throw ConfigError("[comparison] unknown rule '" + rule + "'");
    }
    std::string as_printed =
        to_lower_ascii(ini.get_or("comparison", "table2_as_printed", "false"));
    if (as_printed == "true" || as_printed == "1" || as_printed == "yes") {
        // The threshold table as published carries the two role labels the
        // other way around; this swaps the mapping for anyone who wants the
        // literal reading.
        if (config.thresholds.size() == 2) {
            auto full = config.thresholds.at(Role::FullProfessor);
            auto associate = config.thresholds.at(Role::AssociateProfessor);
            config.thresholds[Role::FullProfessor] =
                ThresholdSet{Role::FullProfessor, associate.t_a, associate.t_b, associate.t_c};
            config.thresholds[Role::AssociateProfessor] =
                ThresholdSet{Role::AssociateProfessor, full.t_a, full.t_b, full.t_c};
        } else {
            throw ConfigError(
                "[comparison] table2_as_printed needs both thresholds sections present");
        }
    } else if (as_printed != "false" && as_printed != "0" && as_printed != "no") {
        throw ConfigError("[comparison] table2_as_printed must be true or false");
    }

    return config;
}

PipelineConfig load_config(const std::filesystem::path& path) {
    PipelineConfig config = parse_config(read_file(path), path.string());

    // relative paths in the file are anchored at the file, not the cwd
    std::filesystem::path base = path.parent_path();
    if (!config.harvest.cache_root.empty() && config.harvest.cache_root.is_relative()) {
        config.harvest.cache_root = base / config.harvest.cache_root;
    }
    if (!config.citations.dump_index_path.empty() &&
        config.citations.dump_index_path.is_relative()) {
        config.citations.dump_index_path = base / config.citations.dump_index_path;
    }

    apply_env_overrides(config);
    return config;
}

void apply_env_overrides(PipelineConfig& config) {
    auto env = [](const char* name) -> std::optional<std::string> {
        const char* value = std::getenv(name);
        if (!value || !*value) return std::nullopt;
        return std::string(value);
    };
    if (auto v = env("ASNEVAL_CACHE_ROOT")) config.harvest.cache_root = *v;
    if (auto v = env("ASNEVAL_DBLP_BASE")) config.harvest.dblp_base = *v;
    if (auto v = env("ASNEVAL_CROSSREF_BASE")) config.harvest.crossref_base = *v;
    if (auto v = env("ASNEVAL_DOIPROXY_BASE")) config.harvest.doiproxy_base = *v;
    if (auto v = env("ASNEVAL_COCI_BASE")) config.harvest.coci_base = *v;
    if (auto v = env("ASNEVAL_CONTACT")) config.harvest.contact = *v;
    if (auto v = env("ASNEVAL_RATE_LIMIT")) {
        auto parsed = parse_int(*v);
        if (!parsed || *parsed <= 0) {
            throw ConfigError("ASNEVAL_RATE_LIMIT must be a positive integer");
        }
        config.harvest.rate_limit_per_sec = static_cast<std::size_t>(*parsed);
    }
}

std::string default_config_text() {
    return R"(# asneval configuration
#
# Thresholds for the two roles (2016 session values, reconciled mapping).
[thresholds.full]
a = 8
b = 216
c = 8

[thresholds.associate]
a = 5
b = 118
c = 6

[normalization]
# none | per-year | window (with window_years)
strategy = none
reference_year = 2016

[harvest]
cache_root = cache
# Live fetches are refused until a contact address is configured:
# contact = you@example.org
rate_limit_per_sec = 2
max_retries = 3
max_in_flight = 4
parallelism = 4
dblp_base = https://dblp.org
crossref_base = https://api.crossref.org
doiproxy_base = https://doi.org
coci_base = https://opencitations.net

[citations]
# local-dump (index_path built with `asneval index build`) | rest-index
source = local-dump
index_path = coci-index

[comparison]
# greater-equal | strictly-greater
rule = greater-equal
# The published threshold table's row labels contradict the per-role worked
# outcomes; set true to use the literal printed mapping (swapped roles).
table2_as_printed = false
)";
}

}  // namespace asneval
