#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cforge/cli/config_file.hpp"
#include "cforge/report.hpp"

namespace cforge::cli {

/// Flag value if given, else the config file entry, else the default.
class Settings {
public:
    explicit Settings(ConfigFile file) : file_(std::move(file)) {}

    std::string text(const std::optional<std::string>& flag, const std::string& key, std::string def) const;
    std::optional<std::string> text(const std::optional<std::string>& flag, const std::string& key) const;
    std::uint64_t number(const std::optional<std::uint64_t>& flag, const std::string& key,
                         std::uint64_t def) const;
    std::optional<std::uint64_t> number(const std::optional<std::uint64_t>& flag, const std::string& key) const;
    bool boolean(bool flag_seen, const std::string& key) const;

private:
    ConfigFile file_;
};

struct Outcome {
    std::vector<report::Record> records;
    int exit_code = 0;
    /// Replaces the record listing in text format (e.g. a bare number).
    std::optional<std::string> plain_text;
};

struct VerifyArgs {
    std::optional<std::string> preset, progression, target, backend;
    std::optional<std::uint64_t> modulus, bound;
};

struct DissectArgs {
    std::optional<std::string> check;
    std::optional<std::uint64_t> trunc;
    bool long_seen = false;
};

struct SturmArgs {
    std::uint64_t weight = 0;
    std::uint64_t level = 0;
    std::optional<std::uint64_t> factor;
};

struct ScanArgs {
    std::optional<std::string> target, moduli;
    std::optional<std::uint64_t> amax, bound;
};

struct OracleArgs {
    std::optional<std::uint64_t> bruteforce_cap, dp_bound, nu3_bound, op_bound;
    bool inject_fault = false;
};

struct ReportArgs {
    std::optional<std::string> table;
    std::optional<std::uint64_t> bound, kmax, modulus;
};

Outcome cmd_verify(const VerifyArgs& a, const Settings& s, std::ostream& err);
Outcome cmd_dissect(const DissectArgs& a, const Settings& s, std::ostream& err);
Outcome cmd_sturm(const SturmArgs& a, const Settings& s);
Outcome cmd_scan(const ScanArgs& a, const Settings& s, std::ostream& err);
Outcome cmd_oracle(const OracleArgs& a, const Settings& s, std::ostream& err);
/// Writes the table straight to `out`.
int cmd_report(const ReportArgs& a, const Settings& s, std::ostream& out);

/// Thrown for bad flag combinations; maps to exit 2 like DomainError.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cforge::cli
