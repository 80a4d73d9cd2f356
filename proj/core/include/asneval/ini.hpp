#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace asneval {

// Plain [section] / key = value configuration files. '#' and ';' start
// comments, whitespace around keys and values is ignored. Unknown sections
// and keys are kept so callers can validate what they care about.
class IniFile {
public:
    static IniFile parse(std::string_view text, const std::string& source_name = "<string>");
    static IniFile parse_file(const std::filesystem::path& path);

    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    bool has_section(const std::string& section) const;

    const std::map<std::string, std::map<std::string, std::string>>& sections() const {
        return sections_;
    }

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace asneval
