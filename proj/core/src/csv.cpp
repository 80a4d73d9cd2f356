#include "asneval/csv.hpp"

#include <istream>
#include <ostream>

#include "asneval/errors.hpp"

namespace asneval {

CsvReader::CsvReader(std::istream& in, char sep) : in_(in), sep_(sep) {}

namespace {

bool quotes_balanced(const std::string& s) {
    bool in_quotes = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') in_quotes = !in_quotes;
    }
    return !in_quotes;
}

}  // namespace

bool CsvReader::next_row(std::vector<std::string>& out) {
    std::string record;
    // blank physical lines are not records
    do {
        if (!std::getline(in_, record)) return false;
        row_line_ = next_line_;
        ++next_line_;
    } while (record.empty() || record == "\r");

    // A quoted field may span physical lines; keep appending until quotes
    // balance out. getline strips the '\n' we re-add, keeping field bytes
    // exact.
    while (!quotes_balanced(record)) {
        std::string more;
        if (!std::getline(in_, more)) {
            throw CsvSyntaxError(row_line_, "unterminated quoted field");
        }
        ++next_line_;
        record.push_back('\n');
        record += more;
    }
    if (!record.empty() && record.back() == '\r') record.pop_back();

    out.clear();
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    for (std::size_t i = 0; i < record.size(); ++i) {
        char c = record[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < record.size() && record[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"' && field.empty() && !field_was_quoted) {
            in_quotes = true;
            field_was_quoted = true;
        } else if (c == sep_) {
            out.push_back(std::move(field));
            field.clear();
            field_was_quoted = false;
        } else {
            field.push_back(c);
        }
    }
    out.push_back(std::move(field));
    return true;
}

CsvWriter::CsvWriter(std::ostream& out, char sep) : out_(out), sep_(sep) {}

void CsvWriter::write_row(std::span<const std::string> fields) {
    const char special[] = {sep_, '"', '\n', '\r', '\0'};
    // a lone empty field must be quoted or the record would read as a blank line
    bool lone_empty = fields.size() == 1 && fields.front().empty();
    bool first = true;
    for (const std::string& f : fields) {
        if (!first) out_.put(sep_);
        first = false;
        bool needs_quotes = lone_empty || f.find_first_of(special) != std::string::npos;
        if (!needs_quotes) {
            out_ << f;
            continue;
        }
        out_.put('"');
        for (char c : f) {
            if (c == '"') out_.put('"');
            out_.put(c);
        }
        out_.put('"');
    }
    out_.put('\n');
}

}  // namespace asneval
