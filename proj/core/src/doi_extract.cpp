#include "asneval/doi_extract.hpp"

#include <algorithm>
#include <unordered_set>

#include "asneval/errors.hpp"

namespace asneval {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_alnum(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Candidate tokens must look like "10.<1-9 digits>/..." so version numbers
// and percentages ("10.5") never enter the pipeline.
bool looks_like_doi_start(std::string_view text, std::size_t pos) {
    std::size_t i = pos + 3;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        ++i;
        ++digits;
    }
    return digits >= 1 && digits <= 9 && i < text.size() && text[i] == '/';
}

int balance(std::string_view token, char open, char close) {
    int n = 0;
    for (char c : token) {
        if (c == open) ++n;
        if (c == close) --n;
    }
    return n;
}

std::string_view strip_trailing_punct(std::string_view token) {
    for (;;) {
        if (token.empty()) break;
        char last = token.back();
        if (last == '.' || last == ',' || last == ';') {
            token.remove_suffix(1);
            continue;
        }
        if (last == ')' && balance(token, '(', ')') < 0) {
            token.remove_suffix(1);
            continue;
        }
        if (last == ']' && balance(token, '[', ']') < 0) {
            token.remove_suffix(1);
            continue;
        }
        if (last == '}' && balance(token, '{', '}') < 0) {
            token.remove_suffix(1);
            continue;
        }
        break;
    }
    return token;
}

}  // namespace

ExtractionResult extract_dois(std::string_view text) {
    ExtractionResult result;
    std::unordered_set<std::string> seen;

    std::size_t pos = 0;
    while (pos + 3 < text.size()) {
        std::size_t hit = text.find("10.", pos);
        if (hit == std::string_view::npos) break;

        bool boundary = hit == 0 || !is_alnum(text[hit - 1]);
        if (!boundary || !looks_like_doi_start(text, hit)) {
            pos = hit + 1;
            continue;
        }

        std::size_t end = hit;
        while (end < text.size() && !is_space(text[end])) ++end;
        std::string_view token = strip_trailing_punct(text.substr(hit, end - hit));

        try {
            Doi doi = normalize_doi(token);
            if (seen.insert(doi.str()).second) result.dois.push_back(std::move(doi));
        } catch (const MalformedDoi& e) {
            result.rejected.emplace_back(std::string(token), e.what());
        }
        pos = end;
    }
    return result;
}

}  // namespace asneval
