#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace asneval {

// RFC-4180-style reader: header-aware callers do their own mapping. Quoted
// fields may contain separators, escaped quotes ("") and newlines. Rows are
// pulled one at a time so multi-gigabyte dumps never live in memory.
class CsvReader {
public:
    explicit CsvReader(std::istream& in, char sep = ',');

    // Fills `out` with the next row's fields. Returns false at end of input.
    // Throws CsvSyntaxError for structural problems (unterminated quote).
    bool next_row(std::vector<std::string>& out);

    // 1-based physical line where the most recent row started.
    std::size_t row_line() const noexcept { return row_line_; }

private:
    std::istream& in_;
    char sep_;
    std::size_t next_line_ = 1;
    std::size_t row_line_ = 0;
};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out, char sep = ',');

    void write_row(std::span<const std::string> fields);

private:
    std::ostream& out_;
    char sep_;
};

}  // namespace asneval
