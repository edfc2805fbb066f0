#include "cforge/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "cforge/errors.hpp"
#include "json.hpp"

namespace cforge::report {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::candidate: return "candidate";
        case Status::info: return "info";
    }
    return "unknown";
}

Format parse_format(std::string_view name) {
    if (name == "text") return Format::text;
    if (name == "csv") return Format::csv;
    if (name == "lines" || name == "jsonl") return Format::lines;
    throw DomainError("unknown output format '" + std::string(name) + "'");
}

Record from_progression(std::string check_id, const congruence::ProgressionReport& r) {
    Record rec;
    rec.check_id = std::move(check_id);
    rec.params = "sequence=" + r.sequence + ";A=" + std::to_string(r.A) + ";B=" + std::to_string(r.B) +
                 ";modulus=" + std::to_string(r.modulus) + ";terms=" + std::to_string(r.terms_checked);
    rec.bound = r.checked_bound;
    rec.status = r.passed() ? Status::pass : Status::fail;
    if (r.counterexample) {
        rec.counterexample = "n=" + std::to_string(r.counterexample->n) +
                             ";value=" + std::to_string(r.counterexample->value);
    }
    return rec;
}

Record from_identity(std::string check_id, const congruence::IdentityCheck& c) {
    Record rec;
    rec.check_id = std::move(check_id);
    rec.params = "identity=" + c.id + ";modulus=" + std::to_string(c.modulus);
    rec.bound = c.trunc;
    rec.status = c.passed() ? Status::pass : Status::fail;
    if (c.mismatch) {
        rec.counterexample = "exponent=" + std::to_string(c.mismatch->exponent) +
                             ";lhs=" + std::to_string(c.mismatch->lhs) +
                             ";rhs=" + std::to_string(c.mismatch->rhs);
    }
    return rec;
}

void write_records(std::ostream& out, std::span<const Record> records, Format format) {
    switch (format) {
        case Format::text:
            for (const auto& r : records) {
                std::string tag(to_string(r.status));
                for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
                out << '[' << tag << "] " << r.check_id << "  " << r.params << "  bound=" << r.bound;
                if (r.counterexample) out << "  counterexample: " << *r.counterexample;
                out << '\n';
            }
            break;
        case Format::csv:
            out << "check_id,params,bound,status,counterexample\n";
            for (const auto& r : records) {
                out << csv_field(r.check_id) << ',' << csv_field(r.params) << ',' << r.bound << ','
                    << to_string(r.status) << ',' << csv_field(r.counterexample.value_or("")) << '\n';
            }
            break;
        case Format::lines:
            for (const auto& r : records) {
                nlohmann::ordered_json j;
                j["check_id"] = r.check_id;
                j["parameters"] = r.params;
                j["bound"] = r.bound;
                j["status"] = std::string(to_string(r.status));
                j["counterexample"] = r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nullptr;
                out << j.dump() << '\n';
            }
            break;
    }
}

void write_timing_trailer(std::ostream& out, std::span<const Record> records, double total_ms) {
    out << "# elapsed_ms total=" << std::fixed << std::setprecision(1) << total_ms;
    for (const auto& r : records) {
        if (r.elapsed_ms > 0.0) out << ' ' << r.check_id << '=' << r.elapsed_ms;
    }
    out << '\n';
    out.unsetf(std::ios_base::floatfield);
}

}  // namespace cforge::report
