#include "asneval/model.hpp"

#include <cmath>

#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

std::string_view role_name(Role role) {
    switch (role) {
        case Role::AssociateProfessor: return "associate";
        case Role::FullProfessor: return "full";
    }
    return "?";
}

Role parse_role(std::string_view s) {
    std::string v = to_lower_ascii(trim(s));
    if (v == "associate" || v == "associate_professor" || v == "associateprofessor" || v == "ii") {
        return Role::AssociateProfessor;
    }
    if (v == "full" || v == "full_professor" || v == "fullprofessor" || v == "i") {
        return Role::FullProfessor;
    }
    throw Error("unknown role: '" + std::string(s) + "' (expected 'associate' or 'full')");
}

std::string_view condition_name(Condition c) {
    switch (c) {
        case Condition::CCV: return "CCV";
        case Condition::CDBLP: return "CDBLP";
        case Condition::CU: return "CU";
    }
    return "?";
}

Condition parse_condition(std::string_view s) {
    std::string v = to_lower_ascii(trim(s));
    if (v == "ccv") return Condition::CCV;
    if (v == "cdblp") return Condition::CDBLP;
    if (v == "cu") return Condition::CU;
    throw Error("unknown condition: '" + std::string(s) + "' (expected CCV, CDBLP or CU)");
}

std::string_view venue_class_name(VenueClass v) {
    switch (v) {
        case VenueClass::Journal: return "journal";
        case VenueClass::NonJournal: return "non-journal";
        case VenueClass::Unknown: return "unknown";
    }
    return "?";
}

IndicatorTriple make_indicator_triple(double a, double b, double c) {
    for (double v : {a, b, c}) {
        if (!std::isfinite(v) || v < 0.0) {
            throw Error("indicator values must be finite and non-negative");
        }
    }
    return {a, b, c};
}

}  // namespace asneval
