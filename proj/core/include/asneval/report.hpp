#pragma once

#include <string>
#include <string_view>

#include "asneval/analysis.hpp"

namespace asneval {

// Human-readable tables for the terminal. Percentages carry two decimals.
std::string render_agreement_table(const AgreementReport& report, std::string_view title);
std::string render_flip_table(const FlipReport& report, std::string_view title);
std::string render_stats_table(const DatasetStats& stats);

// Machine-readable long-form CSV, one metric per row.
std::string agreement_csv(const AgreementReport& report);
std::string flip_csv(const FlipReport& report);
std::string stats_csv(const DatasetStats& stats);

// Plot-ready sweep data: ratio,indicator,agreement_pct.
std::string sweep_csv(const SweepSeries& series);

// Simple self-contained line chart, one line per indicator (journals,
// citations, h-index) over the ratio grid.
std::string sweep_svg(const SweepSeries& series, std::string_view title);

}  // namespace asneval
