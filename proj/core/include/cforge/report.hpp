#pragma once

// Check records and their serializations: human text, CSV, and one JSON
// object per line. Timing is kept out of the record payload and written as a
// single trailing "# elapsed_ms" line so payloads stay byte-comparable.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cforge/congruence.hpp"

namespace cforge::report {

enum class Status { pass, fail, candidate, info };
enum class Format { text, csv, lines };

std::string_view to_string(Status s);
/// "text", "csv", "lines". DomainError otherwise.
Format parse_format(std::string_view name);

struct Record {
    std::string check_id;
    std::string params;  // ';'-separated key=value pairs
    std::uint64_t bound = 0;
    Status status = Status::pass;
    std::optional<std::string> counterexample;
    double elapsed_ms = 0.0;
};

Record from_progression(std::string check_id, const congruence::ProgressionReport& r);
Record from_identity(std::string check_id, const congruence::IdentityCheck& c);

/// Payload only (header row for CSV), no timing.
void write_records(std::ostream& out, std::span<const Record> records, Format format);
/// "# elapsed_ms total=ms id=ms ..." (one line); records with no timing are skipped.
void write_timing_trailer(std::ostream& out, std::span<const Record> records, double total_ms);

}  // namespace cforge::report
