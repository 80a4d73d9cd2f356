#include "asneval/indicators.hpp"

#include <algorithm>

#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

ScientificAge scientific_age(int first_pub_year, int reference_year) {
    if (first_pub_year > reference_year) {
        throw InvalidYears("first publication year " + std::to_string(first_pub_year) +
                           " is after reference year " + std::to_string(reference_year));
    }
    return ScientificAge{reference_year - first_pub_year + 1};
}

NormalizationStrategy NormalizationStrategy::window(int years) {
    if (years < 1) throw Error("normalization window must be at least 1 year");
    return {Kind::Window, years};
}

VenueClass classify_publication(const std::optional<std::string>& dblp_kind,
                                const std::optional<std::string>& crossref_type) {
    bool dblp_journal = false;
    if (dblp_kind) {
        // DBLP kinds are encoded as "<tag>" or "<tag>/<publtype>".
        std::string_view kind = *dblp_kind;
        std::string_view qualifier;
        if (std::size_t slash = kind.find('/'); slash != std::string_view::npos) {
            qualifier = kind.substr(slash + 1);
            kind = kind.substr(0, slash);
        }
        dblp_journal = kind == "article" && qualifier.find("informal") == std::string_view::npos;
    }
    bool crossref_journal = crossref_type && *crossref_type == "journal-article";

    if (dblp_journal || crossref_journal) return VenueClass::Journal;
    if (dblp_kind || crossref_type) return VenueClass::NonJournal;
    return VenueClass::Unknown;
}

int h_index(std::vector<int> citation_counts) {
    std::sort(citation_counts.begin(), citation_counts.end(), std::greater<int>());
    int h = 0;
    for (std::size_t i = 0; i < citation_counts.size(); ++i) {
        if (citation_counts[i] >= static_cast<int>(i) + 1) {
            h = static_cast<int>(i) + 1;
        } else {
            break;
        }
    }
    return h;
}

namespace {

double apply_strategy(double raw, ScientificAge age, const NormalizationStrategy& strategy) {
    switch (strategy.kind) {
        case NormalizationStrategy::Kind::None:
            return raw;
        case NormalizationStrategy::Kind::PerYear:
            return raw / static_cast<double>(age.years);
        case NormalizationStrategy::Kind::Window:
            return raw * std::min(1.0, static_cast<double>(strategy.window_years) /
                                           static_cast<double>(age.years));
    }
    return raw;
}

}  // namespace

IndicatorTriple compute_indicators(const std::vector<Publication>& publications,
                                   const std::unordered_map<Doi, int>& counts,
                                   ScientificAge age,
                                   const NormalizationStrategy& strategy) {
    double raw_a = 0.0;
    double raw_b = 0.0;
    std::vector<int> per_pub_counts;
    per_pub_counts.reserve(publications.size());

    for (const Publication& pub : publications) {
        auto it = counts.find(pub.doi);
        if (it == counts.end()) {
            throw MissingCount("no citation count for DOI " + pub.doi.str());
        }
        if (pub.venue_class == VenueClass::Journal) raw_a += 1.0;
        raw_b += static_cast<double>(it->second);
        per_pub_counts.push_back(it->second);
    }
    double raw_c = static_cast<double>(h_index(std::move(per_pub_counts)));

    return make_indicator_triple(apply_strategy(raw_a, age, strategy),
                                 apply_strategy(raw_b, age, strategy),
                                 apply_strategy(raw_c, age, strategy));
}

}  // namespace asneval
