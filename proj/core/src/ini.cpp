#include "asneval/ini.hpp"

#include <sstream>

#include "asneval/errors.hpp"
#include "asneval/util.hpp"

namespace asneval {

IniFile IniFile::parse(std::string_view text, const std::string& source_name) {
    IniFile file;
    std::string section;
    std::size_t line_no = 0;

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = trim(line);
        if (s.empty() || s.front() == '#' || s.front() == ';') continue;

        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                throw ConfigError(source_name + ":" + std::to_string(line_no) +
                                  ": malformed section header");
            }
            section = std::string(trim(s.substr(1, s.size() - 2)));
            file.sections_[section];  // record even if empty
            continue;
        }

        std::size_t eq = s.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(source_name + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        std::string key(trim(s.substr(0, eq)));
        std::string value(trim(s.substr(eq + 1)));
        if (key.empty()) {
            throw ConfigError(source_name + ":" + std::to_string(line_no) + ": empty key");
        }
        file.sections_[section][key] = value;
    }
    return file;
}

IniFile IniFile::parse_file(const std::filesystem::path& path) {
    return parse(read_file(path), path.string());
}

std::optional<std::string> IniFile::get(const std::string& section, const std::string& key) const {
    auto sit = sections_.find(section);
    if (sit == sections_.end()) return std::nullopt;
    auto kit = sit->second.find(key);
    if (kit == sit->second.end()) return std::nullopt;
    return kit->second;
}

std::string IniFile::get_or(const std::string& section, const std::string& key,
                            const std::string& fallback) const {
    auto v = get(section, key);
    return v ? *v : fallback;
}

bool IniFile::has_section(const std::string& section) const {
    return sections_.contains(section);
}

}  // namespace asneval
