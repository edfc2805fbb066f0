#include "commands.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include "cforge/arith.hpp"
#include "cforge/cli/app.hpp"
#include "cforge/congruence.hpp"
#include "cforge/errors.hpp"
#include "cforge/partitions.hpp"
#include "cforge/qseries.hpp"

namespace cforge::cli {

namespace cg = cforge::congruence;
namespace pt = cforge::partitions;

namespace {

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
    }
    return v;
}

std::vector<std::uint64_t> parse_list(const std::string& text, const std::string& what) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_u64(item, what));
    if (out.empty()) throw UsageError(what + ": empty list");
    return out;
}

std::uint64_t require_positive(std::uint64_t v, const std::string& what) {
    if (v == 0) throw UsageError(what + " must be at least 1");
    return v;
}

void require_at_most(std::uint64_t v, std::uint64_t cap, const std::string& what) {
    if (v > cap) throw ResourceError(what + " = " + std::to_string(v) + " exceeds the cap " + std::to_string(cap));
}

std::string progression_label(std::uint64_t A, std::uint64_t B) {
    return std::to_string(A) + "n+" + std::to_string(B);
}

bool non_square_filter(std::uint64_t n) {
    return !arith::is_square(n) && !(n % 2 == 0 && arith::is_square(n / 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Settings

std::string Settings::text(const std::optional<std::string>& flag, const std::string& key, std::string def) const {
    return text(flag, key).value_or(std::move(def));
}

std::optional<std::string> Settings::text(const std::optional<std::string>& flag, const std::string& key) const {
    if (flag) return flag;
    return file_.get(key);
}

std::uint64_t Settings::number(const std::optional<std::uint64_t>& flag, const std::string& key,
                               std::uint64_t def) const {
    return number(flag, key).value_or(def);
}

std::optional<std::uint64_t> Settings::number(const std::optional<std::uint64_t>& flag,
                                              const std::string& key) const {
    if (flag) return flag;
    if (const auto v = file_.get(key)) return parse_u64(*v, "config key '" + key + "'");
    return std::nullopt;
}

bool Settings::boolean(bool flag_seen, const std::string& key) const {
    if (flag_seen) return true;
    const auto v = file_.get(key);
    if (!v) return false;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw UsageError("config key '" + key + "': expected a boolean, got '" + *v + "'");
}

// ---------------------------------------------------------------------------
// verify

namespace {

struct Preset {
    const char* name;
    const char* target;
    std::uint64_t modulus;
    std::uint64_t bound;
    std::vector<std::array<std::uint64_t, 2>> progressions;
    bool off_squares = false;
};

const std::vector<Preset>& presets() {
    static const std::vector<Preset> table = [] {
        const std::vector<std::array<std::uint64_t, 2>> main(cg::kMainProgressions.begin(),
                                                             cg::kMainProgressions.end());
        return std::vector<Preset>{
            {"thm-nu2", "nu2", 4, 50'000, main},
            {"thm-nu3", "nu3", 2, 20'000, main},
            {"thm-op16", "overpartition", 16, 50'000, main},
            {"thm-16-14", "nu2", 4, 20'000, {{16, 14}}},
            {"kim-mod8", "overpartition", 8, 20'000, {{1, 0}}, true},
        };
    }();
    return table;
}

std::uint64_t default_modulus(const std::string& target) {
    if (target == "nu2") return 4;
    if (target == "overpartition") return 16;
    return 2;
}

std::uint64_t default_bound(const std::string& target) {
    if (target == "nu1") return 100'000;
    if (target == "nu3") return 20'000;
    return 50'000;
}

std::string default_backend(const std::string& target) {
    if (target == "nu3") return "dp";
    if (target == "overpartition") return "series";
    return "formula";
}

// Owns whatever tables back a sequence and exposes the sequence itself.
struct SequenceSource {
    std::unique_ptr<arith::DivisorTables> tables;
    std::unique_ptr<pt::NuFormulas> formulas;
    std::unique_ptr<pt::NuTable> nu;
    cg::Sequence seq;
};

SequenceSource make_source(const std::string& target, const std::string& backend, std::uint64_t modulus,
                           std::uint64_t bound) {
    SequenceSource src;
    const auto combo = target + "/" + backend;
    if (combo == "nu1/formula") {
        require_at_most(bound, 10'000'000, "bound for nu1");
        src.tables = std::make_unique<arith::DivisorTables>(bound);
        src.seq = cg::nu1_sequence(*src.tables);
    } else if (combo == "nu2/formula") {
        require_at_most(bound, 1'000'000, "bound for nu2/formula");
        src.tables = std::make_unique<arith::DivisorTables>(bound);
        src.formulas = std::make_unique<pt::NuFormulas>(*src.tables, 0);
        src.seq = cg::nu2_formula_sequence(*src.formulas, bound);
    } else if (combo == "nu3/formula") {
        require_at_most(bound, 20'000, "bound for nu3/formula");
        src.tables = std::make_unique<arith::DivisorTables>(bound);
        src.formulas = std::make_unique<pt::NuFormulas>(*src.tables, bound);
        src.seq = cg::nu3_formula_sequence(*src.formulas, bound);
    } else if (combo == "nu2/dp" || combo == "nu3/dp") {
        require_at_most(bound, 50'000, "bound for " + combo);
        const unsigned k = target == "nu2" ? 2 : 3;
        src.nu = std::make_unique<pt::NuTable>(pt::nu_table_dp(bound, k, modulus));
        src.seq = cg::nu_dp_sequence(*src.nu, k);
    } else if (combo == "overpartition/series") {
        require_at_most(bound, 500'000, "bound for overpartition/series");
        src.seq = cg::series_sequence("overpartition", pt::overpartition_table(bound, modulus));
    } else if (combo == "overpartition/nu") {
        require_at_most(bound, 5'000, "bound for overpartition/nu");
        unsigned kmax = pt::max_feasible_k(bound);
        if (std::has_single_bit(modulus)) {
            kmax = std::min<unsigned>(kmax, static_cast<unsigned>(std::countr_zero(modulus)) - 1);
        }
        src.nu = std::make_unique<pt::NuTable>(pt::nu_table_dp(bound, std::max(kmax, 1U), modulus));
        src.seq = cg::overpartition_nu_sequence(*src.nu);
    } else {
        throw UsageError("unsupported target/backend combination '" + combo + "'");
    }
    return src;
}

}  // namespace

Outcome cmd_verify(const VerifyArgs& a, const Settings& s, std::ostream& err) {
    const auto preset_name = s.text(a.preset, "preset");
    const auto progression = s.text(a.progression, "progression");

    std::string target;
    std::uint64_t modulus = 0;
    std::uint64_t bound = 0;
    std::vector<std::array<std::uint64_t, 2>> progs;
    bool off_squares = false;
    std::string id_prefix;

    if (preset_name) {
        if (progression || a.target || a.modulus) {
            throw UsageError("--preset fixes the progression, target and modulus; drop the extra flags");
        }
        const auto& all = presets();
        const auto it = std::find_if(all.begin(), all.end(), [&](const Preset& p) { return p.name == *preset_name; });
        if (it == all.end()) {
            std::string names;
            for (const auto& p : all) names += std::string(names.empty() ? "" : ", ") + p.name;
            throw UsageError("unknown preset '" + *preset_name + "' (known: " + names + ")");
        }
        target = it->target;
        modulus = it->modulus;
        bound = s.number(a.bound, "bound", it->bound);
        progs = it->progressions;
        off_squares = it->off_squares;
        id_prefix = "verify:" + *preset_name;
    } else {
        if (!progression) throw UsageError("verify needs --preset or --progression A,B");
        const auto ab = parse_list(*progression, "--progression");
        if (ab.size() != 2) throw UsageError("--progression expects A,B");
        target = s.text(a.target, "target", "nu2");
        modulus = s.number(a.modulus, "modulus", default_modulus(target));
        bound = s.number(a.bound, "bound", default_bound(target));
        progs.push_back({ab[0], ab[1]});
        id_prefix = "verify:" + target;
    }
    if (target != "nu1" && target != "nu2" && target != "nu3" && target != "overpartition") {
        throw UsageError("unknown target '" + target + "' (nu1, nu2, nu3, overpartition)");
    }
    if (modulus < 2) throw UsageError("--modulus must be at least 2");
    require_positive(bound, "--bound");
    const auto backend = s.text(a.backend, "backend", default_backend(target));

    const auto src = make_source(target, backend, modulus, bound);
    Outcome o;
    for (const auto& [A, B] : progs) {
        const auto rep = off_squares ? cg::verify_progression(src.seq, A, B, modulus, bound, non_square_filter)
                             : cg::verify_progression(src.seq, A, B, modulus, bound);
        auto rec = report::from_progression(id_prefix + ":" + progression_label(A, B), rep);
        rec.params += ";backend=" + backend;
        if (off_squares) rec.params += ";filter=non-square-non-twice-square";
        if (!rep.passed()) {
            o.exit_code = kExitCounterexample;
            err << "counterexample: " << target << "(" << rep.counterexample->n << ") = "
                << rep.counterexample->value << " is not 0 mod " << modulus << '\n';
        }
        o.records.push_back(std::move(rec));
    }
    return o;
}

// ---------------------------------------------------------------------------
// dissect

namespace {

struct CheckSpec {
    const char* name;
    std::uint64_t min_trunc;
};

constexpr std::array kChecks{
    CheckSpec{"lemma-3", 8}, CheckSpec{"lemma-2", 8}, CheckSpec{"two-adic", 8}, CheckSpec{"op-chain", 64},
    CheckSpec{"theta", 8},   CheckSpec{"T16", 32},    CheckSpec{"R36", 31},
};

constexpr std::uint64_t kIdentityTruncCap = 100'000;
constexpr std::uint64_t kParityTruncCap = 2'000'000;
constexpr std::uint64_t kR36DefaultLimit = 10'000;

report::Record parity_record(const cg::ParityCheck& c) {
    report::Record r;
    r.check_id = "dissect:" + c.id;
    r.params = "modulus=2";
    r.bound = c.bound;
    r.status = c.passed() ? report::Status::pass : report::Status::fail;
    if (c.first_off_support) {
        r.counterexample = "off-support coefficient at exponent " + std::to_string(*c.first_off_support);
    } else if (c.first_odd) {
        r.counterexample = "odd coefficient at exponent " + std::to_string(*c.first_odd);
    }
    return r;
}

}  // namespace

Outcome cmd_dissect(const DissectArgs& a, const Settings& s, std::ostream& err) {
    const auto check = s.text(a.check, "check", "all");
    const auto trunc_opt = s.number(a.trunc, "trunc");
    if (!trunc_opt) throw UsageError("dissect needs --trunc");
    const std::uint64_t trunc = *trunc_opt;
    const bool long_ok = s.boolean(a.long_seen, "long");

    std::vector<std::string> selected;
    std::uint64_t minimum = 0;
    for (const auto& c : kChecks) {
        if (check == "all" || check == c.name) {
            selected.emplace_back(c.name);
            minimum = std::max(minimum, c.min_trunc);
        }
    }
    if (selected.empty()) {
        throw UsageError("unknown check '" + check + "' (lemma-3, lemma-2, two-adic, op-chain, theta, T16, R36, all)");
    }
    if (trunc < minimum) {
        throw UsageError("--check " + check + " needs --trunc of at least " + std::to_string(minimum));
    }
    const bool wants_r36 = std::find(selected.begin(), selected.end(), "R36") != selected.end();
    if (wants_r36 && trunc > kR36DefaultLimit && !long_ok) {
        throw UsageError("R36 beyond " + std::to_string(kR36DefaultLimit) + " is a long check; pass --long");
    }
    const bool needs_identity = std::any_of(selected.begin(), selected.end(), [](const std::string& n) {
        return n == "lemma-3" || n == "lemma-2" || n == "two-adic" || n == "op-chain";
    });
    if (needs_identity) require_at_most(trunc, kIdentityTruncCap, "--trunc for identity checks");
    require_at_most(trunc, kParityTruncCap, "--trunc");

    Outcome o;
    auto add_identities = [&](const std::vector<cg::IdentityCheck>& checks, const std::string& prefix) {
        for (const auto& c : checks) {
            if (!prefix.empty() && c.id.rfind(prefix, 0) != 0) continue;
            o.records.push_back(report::from_identity("dissect:" + c.id, c));
        }
    };

    std::unique_ptr<arith::DivisorTables> tables;
    auto divisor_tables = [&]() -> const arith::DivisorTables& {
        if (!tables) tables = std::make_unique<arith::DivisorTables>(trunc);
        return *tables;
    };

    std::vector<cg::IdentityCheck> lemmas;
    for (const auto& name : selected) {
        if (name == "lemma-3" || name == "lemma-2") {
            if (lemmas.empty()) lemmas = cg::check_dissection_lemmas(trunc);
            add_identities(lemmas, name);
        } else if (name == "two-adic") {
            add_identities(cg::check_two_adic_lemma(trunc), "");
        } else if (name == "op-chain") {
            add_identities(cg::check_overpartition_chain(trunc), "");
        } else if (name == "theta") {
            const auto r = cg::f_g_theta_parity_check(divisor_tables(), trunc);
            report::Record rec;
            rec.check_id = "dissect:theta";
            rec.params = "modulus=2";
            rec.bound = trunc;
            rec.status = r.passed() ? report::Status::pass : report::Status::fail;
            if (r.first_f_mismatch) {
                rec.counterexample = "F differs at exponent " + std::to_string(*r.first_f_mismatch);
            } else if (r.first_g_mismatch) {
                rec.counterexample = "G differs at exponent " + std::to_string(*r.first_g_mismatch);
            }
            o.records.push_back(std::move(rec));
        } else if (name == "T16") {
            o.records.push_back(parity_record(cg::check_T16(divisor_tables(), trunc)));
        } else if (name == "R36") {
            o.records.push_back(parity_record(cg::check_R36(divisor_tables(), trunc)));
        }
    }
    for (const auto& r : o.records) {
        if (r.status == report::Status::fail) {
            o.exit_code = kExitCounterexample;
            err << "mismatch: " << r.check_id << ": " << r.counterexample.value_or("") << '\n';
        }
    }
    return o;
}

// ---------------------------------------------------------------------------
// sturm

Outcome cmd_sturm(const SturmArgs& a, const Settings& s) {
    const std::uint64_t factor = s.number(a.factor, "factor", 1);
    if (a.weight == 0 || a.level == 0 || factor == 0) {
        throw UsageError("sturm: weight, level and factor must be positive integers");
    }
    const auto value = cg::sturm_bound({a.weight, a.level, factor});
    Outcome o;
    report::Record r;
    r.check_id = "sturm";
    r.params = "weight=" + std::to_string(a.weight) + ";level=" + std::to_string(a.level) +
               ";factor=" + std::to_string(factor);
    r.bound = value;
    r.status = report::Status::info;
    o.records.push_back(std::move(r));
    o.plain_text = std::to_string(value);
    return o;
}

// ---------------------------------------------------------------------------
// scan

Outcome cmd_scan(const ScanArgs& a, const Settings& s, std::ostream& err) {
    const auto target_text = s.text(a.target, "target");
    if (!target_text) throw UsageError("scan needs --target (e.g. nu2-mod4)");
    const std::uint64_t amax = require_positive(s.number(a.amax, "amax", 40), "--amax");
    const std::uint64_t bound = require_positive(s.number(a.bound, "bound", 5'000), "--bound");

    std::vector<cg::ScanTarget> targets;
    if (const auto moduli = s.text(a.moduli, "moduli")) {
        const auto cut = target_text->rfind("-mod");
        const std::string seq = cut == std::string::npos ? *target_text : target_text->substr(0, cut);
        for (const auto m : parse_list(*moduli, "--moduli")) {
            targets.push_back(cg::parse_scan_target(seq + "-mod" + std::to_string(m)));
        }
    } else {
        targets.push_back(cg::parse_scan_target(*target_text));
    }

    Outcome o;
    for (const auto& t : targets) {
        const auto result = cg::scan_progressions(amax, bound, t);
        for (const auto& c : result.candidates) {
            const auto& f = c.flags;
            report::Record r;
            r.check_id = "scan:" + t.id();
            r.params = "A=" + std::to_string(c.A) + ";B=" + std::to_string(c.B) +
                       ";terms=" + std::to_string(c.terms) + ";sigma1_mod8=" + std::to_string(f.sigma1_mod8) +
                       ";d_half_square=" + std::to_string(f.d_half_square) +
                       ";avoids_two_squares=" + std::to_string(f.avoids_two_squares) +
                       ";has_odd_terms=" + std::to_string(f.has_odd_terms) +
                       ";nu2_mod4=" + std::to_string(f.nu2_mod4);
            r.bound = bound;
            r.status = report::Status::candidate;
            o.records.push_back(std::move(r));
            if (!f.conditions_hold()) {
                err << "WARNING: " << t.id() << " vanishes on " << progression_label(c.A, c.B)
                    << " up to " << bound << " but the conditions fail:"
                    << (f.sigma1_mod8 ? "" : " sigma1(n) != 0 mod 8;")
                    << (f.d_half_square ? "" : " d(n) != d(n/2)^2 mod 8;")
                    << (f.avoids_two_squares ? "" : " B is a sum of two squares mod A;")
                    << (f.has_odd_terms ? " (odd terms present; d-condition covers even terms only)" : "")
                    << '\n';
            }
        }
        report::Record summary;
        summary.check_id = "scan:" + t.id();
        summary.params = "Amax=" + std::to_string(amax) + ";candidates=" + std::to_string(result.candidates.size()) +
                         ";note=finite-range evidence only";
        summary.bound = bound;
        summary.status = report::Status::info;
        o.records.push_back(std::move(summary));
    }
    return o;
}

// ---------------------------------------------------------------------------
// oracle

namespace {

constexpr std::uint64_t kOracleBruteCap = 80;
constexpr std::uint64_t kOracleFaultN = 37;

struct OracleSuite {
    std::string id;
    std::string params;
    std::uint64_t bound = 0;
    std::optional<std::string> failure;
};

report::Record to_record(const OracleSuite& s) {
    report::Record r;
    r.check_id = "oracle:" + s.id;
    r.params = s.params;
    r.bound = s.bound;
    r.status = s.failure ? report::Status::fail : report::Status::pass;
    r.counterexample = s.failure;
    return r;
}

}  // namespace

Outcome cmd_oracle(const OracleArgs& a, const Settings& s, std::ostream& err) {
    const auto cap = require_positive(s.number(a.bruteforce_cap, "bruteforce-cap", pt::kBruteForceCap),
                                      "--bruteforce-cap");
    const auto dp_bound = require_positive(s.number(a.dp_bound, "dp-bound", 120), "--dp-bound");
    const auto nu3_bound = require_positive(s.number(a.nu3_bound, "nu3-bound", 80), "--nu3-bound");
    const auto op_bound = require_positive(s.number(a.op_bound, "op-bound", 500), "--op-bound");
    require_at_most(cap, kOracleBruteCap, "--bruteforce-cap");
    require_at_most(std::max(dp_bound, nu3_bound), pt::kExactBoundCap, "--dp-bound/--nu3-bound");
    const bool inject = a.inject_fault || s.boolean(false, "inject-fault");

    const std::uint64_t table_bound = std::max({cap, dp_bound, nu3_bound});
    const arith::DivisorTables tables(table_bound);
    auto exact = pt::nu_table_dp(table_bound, pt::kDefaultKmax, 0);
    if (inject) {
        const std::uint64_t n = std::min(kOracleFaultN, cap);
        exact.overwrite(n, 2, exact.value(n, 2) + 1);
        err << "note: injected fault at (n, k) = (" << n << ", 2)\n";
    }

    std::vector<OracleSuite> suites;

    // Brute force against the DP for every k, and against the closed forms for k = 2, 3.
    {
        OracleSuite suite{"bruteforce", "kmax=" + std::to_string(pt::kDefaultKmax), cap, std::nullopt};
        for (std::uint64_t n = 1; n <= cap && !suite.failure; ++n) {
            for (unsigned k = 1; k <= pt::kDefaultKmax; ++k) {
                const auto brute = pt::nu_bruteforce(static_cast<unsigned>(n), k, static_cast<unsigned>(cap));
                const auto dp = exact.value(n, k);
                std::optional<std::int64_t> formula;
                if (k == 2) formula = pt::nu2_formula(n, tables);
                if (k == 3) formula = pt::nu3_formula(n, tables);
                const bool ok = brute == dp && (!formula || static_cast<std::uint64_t>(*formula) == dp);
                if (!ok) {
                    suite.failure = "n=" + std::to_string(n) + ";k=" + std::to_string(k) +
                                    ";bruteforce=" + std::to_string(brute) + ";dp=" + std::to_string(dp) +
                                    (formula ? ";formula=" + std::to_string(*formula) : std::string{});
                    break;
                }
            }
        }
        suites.push_back(std::move(suite));
    }

    auto formula_vs_dp = [&](const std::string& id, unsigned k, std::uint64_t bound) {
        OracleSuite suite{id, "k=" + std::to_string(k), bound, std::nullopt};
        for (std::uint64_t n = 1; n <= bound; ++n) {
            const std::int64_t formula = k == 2 ? pt::nu2_formula(n, tables) : pt::nu3_formula(n, tables);
            const auto dp = exact.value(n, k);
            if (static_cast<std::uint64_t>(formula) != dp) {
                suite.failure = "n=" + std::to_string(n) + ";k=" + std::to_string(k) +
                                ";formula=" + std::to_string(formula) + ";dp=" + std::to_string(dp);
                break;
            }
        }
        suites.push_back(std::move(suite));
    };
    formula_vs_dp("nu2-formula-dp", 2, dp_bound);
    formula_vs_dp("nu3-formula-dp", 3, nu3_bound);

    {
        constexpr std::uint64_t kModulus = std::uint64_t{1} << 20;
        OracleSuite suite{"overpartition-identity", "modulus=" + std::to_string(kModulus), op_bound, std::nullopt};
        const auto series = pt::overpartition_table(op_bound, kModulus);
        const unsigned kmax = std::max(1U, std::min<unsigned>(pt::max_feasible_k(op_bound), 19));
        auto nu = pt::nu_table_dp(op_bound, kmax, kModulus);
        if (inject) {
            const std::uint64_t n = std::min(kOracleFaultN, op_bound);
            nu.overwrite(n, 2, (nu.value(n, 2) + 1) % kModulus);
        }
        for (std::uint64_t n = 0; n <= op_bound; ++n) {
            const auto via_nu = pt::overpartition_from_nu(n, nu);
            if (via_nu != series[n]) {
                suite.failure = "n=" + std::to_string(n) + ";series=" + std::to_string(series[n]) +
                                ";sum_2^k_nu_k=" + std::to_string(via_nu);
                break;
            }
        }
        suites.push_back(std::move(suite));
    }

    Outcome o;
    for (const auto& suite : suites) {
        if (suite.failure) {
            o.exit_code = kExitCounterexample;
            err << "disagreement in " << suite.id << ": " << *suite.failure << '\n';
        }
        o.records.push_back(to_record(suite));
    }
    return o;
}

// ---------------------------------------------------------------------------
// report

int cmd_report(const ReportArgs& a, const Settings& s, std::ostream& out) {
    const auto table = s.text(a.table, "table", "nu");
    const auto bound = require_positive(s.number(a.bound, "bound", 100), "--bound");
    if (table == "nu") {
        const auto kmax = static_cast<unsigned>(
            require_positive(s.number(a.kmax, "kmax", pt::kDefaultKmax), "--kmax"));
        const auto modulus = s.number(a.modulus, "modulus", 0);
        if (modulus == 1) throw UsageError("--modulus must be 0 (exact) or at least 2");
        pt::write_csv(out, pt::nu_table_dp(bound, kmax, modulus));
        return kExitPass;
    }
    if (table == "overpartition") {
        const auto modulus = s.number(a.modulus, "modulus", std::uint64_t{1} << 30);
        if (modulus < 2) throw UsageError("--modulus must be at least 2 for series dumps");
        qseries::write_dump(out, pt::overpartition_table(bound, modulus));
        return kExitPass;
    }
    throw UsageError("unknown table '" + table + "' (nu, overpartition)");
}

}  // namespace cforge::cli
