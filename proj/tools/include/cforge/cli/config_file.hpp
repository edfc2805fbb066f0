#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace cforge::cli {

/// Flat `key = value` settings. Blank lines and lines starting with '#' or
/// ';' are skipped; a repeated key keeps its last value. Keys are case
/// sensitive and may use '-' or '_' interchangeably.
class ConfigFile {
public:
    ConfigFile() = default;

    /// DomainError naming the line on malformed input or an unreadable file.
    static ConfigFile load(const std::filesystem::path& path);
    static ConfigFile parse(std::istream& in, const std::string& source = "<config>");

    std::optional<std::string> get(const std::string& key) const;
    bool empty() const { return values_.empty(); }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace cforge::cli
