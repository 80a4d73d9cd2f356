#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "asneval/doi.hpp"

namespace asneval {

enum class Role {
    AssociateProfessor,
    FullProfessor,
};

std::string_view role_name(Role role);           // "associate" / "full"
Role parse_role(std::string_view s);             // accepts several spellings, throws Error

// The three experiment conditions: DOIs from the CV, DOIs from DBLP, and
// their union. Always iterated and reported in this order.
enum class Condition {
    CCV,
    CDBLP,
    CU,
};

inline constexpr Condition kAllConditions[] = {Condition::CCV, Condition::CDBLP, Condition::CU};

std::string_view condition_name(Condition c);    // "CCV" / "CDBLP" / "CU"
Condition parse_condition(std::string_view s);

enum class VenueClass {
    Journal,
    NonJournal,
    Unknown,  // no metadata source classified this work
};

std::string_view venue_class_name(VenueClass v);

enum class Source : unsigned {
    CV = 1u << 0,
    DBLP = 1u << 1,
};

struct SourceSet {
    unsigned bits = 0;

    void add(Source s) { bits |= static_cast<unsigned>(s); }
    bool has(Source s) const { return (bits & static_cast<unsigned>(s)) != 0; }
    bool empty() const { return bits == 0; }
    friend bool operator==(const SourceSet&, const SourceSet&) = default;
};

// One application to the habilitation. The same person may appear as several
// candidates (one per session/level), so id is the identity, not the name.
struct Candidate {
    std::string id;
    Role role = Role::AssociateProfessor;
    std::string name;
    std::optional<std::string> orcid;
    std::set<Doi> cv_dois;
    std::set<Doi> dblp_dois;
    std::optional<int> first_pub_year;
};

struct Publication {
    Doi doi;
    std::optional<int> year;
    VenueClass venue_class = VenueClass::Unknown;
    SourceSet sources;
};

// One DOI-to-DOI citation link, directed citing -> cited.
struct CitationEdge {
    Doi citing;
    Doi cited;
    std::optional<std::string> creation;  // ISO date as reported by the source

    friend bool operator==(const CitationEdge&, const CitationEdge&) = default;
};

// Indicator values for one candidate under one condition:
//   a = journal-article count, b = citations received, c = h-index,
// each possibly rescaled by a normalization strategy (hence real-valued).
struct IndicatorTriple {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    friend bool operator==(const IndicatorTriple&, const IndicatorTriple&) = default;
};

// Throws Error unless all three values are finite and non-negative.
IndicatorTriple make_indicator_triple(double a, double b, double c);

struct ThresholdSet {
    Role role = Role::AssociateProfessor;
    unsigned t_a = 0;
    unsigned t_b = 0;
    unsigned t_c = 0;

    friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;
};

// Per-indicator pass flags plus the two-of-three verdict. Construct through
// from_flags so `overall` can never disagree with the flags.
struct EvaluationOutcome {
    bool pass_a = false;
    bool pass_b = false;
    bool pass_c = false;
    bool overall = false;

    static EvaluationOutcome from_flags(bool a, bool b, bool c) {
        return {a, b, c, (int(a) + int(b) + int(c)) >= 2};
    }

    friend bool operator==(const EvaluationOutcome&, const EvaluationOutcome&) = default;
};

}  // namespace asneval
