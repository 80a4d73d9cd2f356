#pragma once

#include <filesystem>
#include <string>

#include "asneval/pipeline.hpp"

namespace asneval {

// Built-in defaults: the 2016 session thresholds under the reconciled
// role mapping (full 8/216/8, associate 5/118/6), inclusive comparison, no
// normalization, local-dump citations.
PipelineConfig default_config();

// Reads the INI-style configuration. Recognized sections:
//   [thresholds.full] / [thresholds.associate]  a, b, c
//   [normalization]   strategy = none|per-year|window, window_years,
//                     reference_year
//   [harvest]         cache_root, contact, rate_limit_per_sec, max_retries,
//                     max_in_flight, parallelism, dblp_base, crossref_base,
//                     doiproxy_base, coci_base
//   [citations]       source = local-dump|rest-index, index_path
//   [comparison]      rule = greater-equal|strictly-greater,
//                     table2_as_printed = true|false
// Unknown keys are rejected so typos cannot silently fall back to defaults.
PipelineConfig load_config(const std::filesystem::path& path);

PipelineConfig parse_config(std::string_view text, const std::string& source_name);

// Environment overrides, applied after the file:
//   ASNEVAL_CACHE_ROOT, ASNEVAL_DBLP_BASE, ASNEVAL_CROSSREF_BASE,
//   ASNEVAL_DOIPROXY_BASE, ASNEVAL_COCI_BASE, ASNEVAL_RATE_LIMIT,
//   ASNEVAL_CONTACT
void apply_env_overrides(PipelineConfig& config);

// The reference configuration file shipped with the tool.
std::string default_config_text();

}  // namespace asneval
