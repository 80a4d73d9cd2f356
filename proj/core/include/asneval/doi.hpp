#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace asneval {

// A DOI in canonical form: lowercase, no scheme or resolver prefix, shaped as
// "10.<digits>/<suffix>". DOI matching is case-insensitive, so folding to one
// case makes plain string equality the right comparison; lowercase is the form
// the large citation dumps use. Obtain instances through normalize_doi().
class Doi {
public:
    Doi() = default;  // empty sentinel so Doi can live in containers

    // Wraps a string that is already canonical; throws MalformedDoi otherwise.
    static Doi from_normalized(std::string value);

    const std::string& str() const noexcept { return value_; }
    bool empty() const noexcept { return value_.empty(); }

    auto operator<=>(const Doi&) const = default;

private:
    explicit Doi(std::string value) : value_(std::move(value)) {}
    friend Doi normalize_doi(std::string_view raw);

    std::string value_;
};

// True iff s is a canonical DOI: "10." + 1..9 digits + "/" + at least one
// character, no whitespace, no ASCII uppercase. Bytes outside ASCII are
// allowed anywhere in the suffix (suffix syntax is registrant-defined).
bool is_valid_doi_syntax(std::string_view s);

// Canonicalizes raw DOI spellings: trims whitespace, strips one leading
// "doi:" label or doi.org / dx.doi.org resolver URL (any letter case), folds
// ASCII letters to lowercase. Throws MalformedDoi when the remainder is not a
// valid DOI. Idempotent on every accepted input.
Doi normalize_doi(std::string_view raw);

}  // namespace asneval

template <>
struct std::hash<asneval::Doi> {
    std::size_t operator()(const asneval::Doi& d) const noexcept {
        return std::hash<std::string>()(d.str());
    }
};
