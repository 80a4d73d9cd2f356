#include "asneval/doi.hpp"

#include <array>

#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

bool is_valid_doi_syntax(std::string_view s) {
    if (s.size() < 6 || s.substr(0, 3) != "10.") return false;
    std::size_t i = 3;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        ++i;
        ++digits;
    }
    if (digits < 1 || digits > 9) return false;
    if (i >= s.size() || s[i] != '/') return false;
    ++i;
    if (i >= s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j) {
        unsigned char c = static_cast<unsigned char>(s[j]);
        if (c <= ' ' || c == 0x7f) return false;  // whitespace and control bytes
        if (c >= 'A' && c <= 'Z') return false;   // canonical form is lowercase
    }
    return true;
}

Doi normalize_doi(std::string_view raw) {
    static constexpr std::array<std::string_view, 5> prefixes = {
        "doi:",
        "http://doi.org/",
        "https://doi.org/",
        "http://dx.doi.org/",
        "https://dx.doi.org/",
    };

    std::string_view s = trim(raw);
    for (std::string_view prefix : prefixes) {
        if (starts_with_ci(s, prefix)) {
            s.remove_prefix(prefix.size());
            // "doi: 10.x/y" is a common CV spelling; drop the gap too.
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            break;  // at most one prefix
        }
    }

    std::string value = to_lower_ascii(s);
    if (!is_valid_doi_syntax(value)) {
        throw MalformedDoi("not a valid DOI: '" + std::string(raw) + "'");
    }
    return Doi(std::move(value));
}

Doi Doi::from_normalized(std::string value) {
    if (!is_valid_doi_syntax(value)) {
        throw MalformedDoi("not a normalized DOI: '" + value + "'");
    }
    Doi d;
    d.value_ = std::move(value);
    return d;
}

}  // namespace asneval
