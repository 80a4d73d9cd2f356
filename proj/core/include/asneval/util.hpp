#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace asneval {

std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);
bool starts_with_ci(std::string_view s, std::string_view prefix);
std::vector<std::string> split(std::string_view s, char sep);

// Integer/double parsing that reports the offending text instead of silently
// truncating like atoi does.
std::optional<long long> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

// Shortest representation that round-trips, used everywhere a double ends up
// in a report so that repeated runs are byte-identical.
std::string format_double(double v);

// Fixed 2-decimal formatting for percentages in printed tables.
std::string format_pct(double v);

std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

// RFC 3986 percent-encoding of everything outside the unreserved set.
std::string percent_encode(std::string_view s);

// Percent-encodes a path while keeping the '/' separators, for identifiers
// (DOIs, DBLP pids) embedded in URL paths.
std::string encode_path_segments(std::string_view path);

std::string read_file(const std::filesystem::path& path);

// Writes via a sibling temp file plus rename so readers never observe a
// truncated file.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace asneval
