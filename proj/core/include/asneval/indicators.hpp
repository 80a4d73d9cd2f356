#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "asneval/model.hpp"

namespace asneval {

// Years since the first publication, inclusive of both endpoints: a first
// publication in the reference year itself gives age 1, which keeps per-year
// normalization away from division by zero.
struct ScientificAge {
    int years = 1;
};

ScientificAge scientific_age(int first_pub_year, int reference_year);  // throws InvalidYears

struct NormalizationStrategy {
    enum class Kind {
        None,     // raw values
        PerYear,  // value / age
        Window,   // value * min(1, window / age)
    };

    Kind kind = Kind::None;
    int window_years = 0;

    static NormalizationStrategy none() { return {Kind::None, 0}; }
    static NormalizationStrategy per_year() { return {Kind::PerYear, 0}; }
    static NormalizationStrategy window(int years);  // throws Error unless years >= 1

    friend bool operator==(const NormalizationStrategy&, const NormalizationStrategy&) = default;
};

// Merges the type labels the two metadata sources use. Either source calling
// the work a journal article wins: agreement on this indicator is limited by
// coverage, not accuracy, so recall is preferred. DBLP "article" entries
// qualified as informal (arXiv and the like) do not count as journal.
VenueClass classify_publication(const std::optional<std::string>& dblp_kind,
                                const std::optional<std::string>& crossref_type);

// Largest h such that at least h of the counts are >= h.
int h_index(std::vector<int> citation_counts);

// Raw values: a = publications classified Journal, b = total citations over
// all publications, c = h-index of the citation counts. Unknown-venue works
// never count toward a but always toward b and c. `counts` must cover every
// publication DOI (zero is fine); a gap throws MissingCount.
IndicatorTriple compute_indicators(const std::vector<Publication>& publications,
                                   const std::unordered_map<Doi, int>& counts,
                                   ScientificAge age,
                                   const NormalizationStrategy& strategy);

}  // namespace asneval
