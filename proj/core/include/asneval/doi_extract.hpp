#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asneval/doi.hpp"

namespace asneval {

struct ExtractionResult {
    // First-occurrence order, deduplicated after normalization.
    std::vector<Doi> dois;
    // (raw match, reason) for tokens that looked like a DOI but failed to
    // normalize; plain prose numbers like "10.5" are not candidates at all.
    std::vector<std::pair<std::string, std::string>> rejected;
};

// Scans plain text for DOI tokens. A candidate starts with "10.<digits>/" at
// a word boundary (which covers "doi:" labels and resolver URLs, since ':'
// and '/' are boundaries) and runs to the next whitespace. Trailing sentence
// punctuation . , ; is stripped iteratively; a trailing ) ] } is stripped
// only while the token holds more closers than openers of that kind, so DOIs
// with balanced parentheses in the suffix survive a closing sentence
// parenthesis.
ExtractionResult extract_dois(std::string_view text);

}  // namespace asneval
