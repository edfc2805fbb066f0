#include "cforge/cli/app.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "cforge/errors.hpp"
#include "cforge/parallel.hpp"
#include "commands.hpp"

namespace cforge::cli {

namespace {

struct Common {
    std::optional<std::string> config;
    std::optional<std::string> format;
    std::optional<std::string> output;
};

void add_common(CLI::App* sub, Common& c, bool with_format = true) {
    sub->add_option("--config", c.config, "flat key=value file; flags override it");
    if (with_format) sub->add_option("--format", c.format, "text | csv | lines");
    sub->add_option("--output,-o", c.output, "write the report here instead of stdout");
}

Settings load_settings(const Common& c) {
    return Settings(c.config ? ConfigFile::load(*c.config) : ConfigFile{});
}

// Returns the stream reports should go to; `file` owns it when --output is set.
std::ostream& open_output(const Settings& s, const Common& c, std::ostream& out,
                          std::unique_ptr<std::ofstream>& file) {
    const auto path = s.text(c.output, "output");
    if (!path) return out;
    file = std::make_unique<std::ofstream>(*path);
    if (!*file) throw UsageError("cannot open output file '" + *path + "'");
    return *file;
}

int emit(const Outcome& o, const Settings& s, const Common& c, std::ostream& out, double elapsed_ms) {
    const auto format = report::parse_format(s.text(c.format, "format", "text"));
    std::unique_ptr<std::ofstream> file;
    std::ostream& sink = open_output(s, c, out, file);
    if (format == report::Format::text && o.plain_text) {
        sink << *o.plain_text << '\n';
        return o.exit_code;
    }
    report::write_records(sink, o.records, format);
    report::write_timing_trailer(sink, o.records, elapsed_ms);
    return o.exit_code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cforge: congruence checks for partitions into few part sizes"};
    app.require_subcommand(1);
    std::optional<unsigned> threads;
    app.add_option("--threads", threads, "worker threads (overrides CONGRUENCE_FORGE_THREADS)")
        ->check(CLI::PositiveNumber);

    Common vc, dc, sc, nc, oc, rc;

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check f(An+B) = 0 (mod m) over a finite range");
    verify->add_option("--preset", va.preset, "thm-nu2 | thm-nu3 | thm-op16 | thm-16-14 | kim-mod8");
    verify->add_option("--progression", va.progression, "A,B");
    verify->add_option("--target", va.target, "nu1 | nu2 | nu3 | overpartition");
    verify->add_option("--backend", va.backend, "formula | dp | series | nu");
    verify->add_option("--modulus", va.modulus);
    verify->add_option("--bound", va.bound, "largest n checked");
    add_common(verify, vc);

    DissectArgs da;
    auto* dissect = app.add_subcommand("dissect", "q-series identity and parity checks");
    dissect->add_option("--check", da.check, "lemma-3 | lemma-2 | two-adic | op-chain | theta | T16 | R36 | all");
    dissect->add_option("--trunc", da.trunc, "number of coefficients (inclusive bound for T16/R36)");
    auto* long_flag = dissect->add_flag("--long", "allow long-running bounds");
    add_common(dissect, dc);

    SturmArgs sa;
    auto* sturm = app.add_subcommand("sturm", "Sturm bound for weight W, level N");
    sturm->add_option("weight", sa.weight)->required();
    sturm->add_option("level", sa.level)->required();
    sturm->add_option("--factor", sa.factor, "index factor multiplying the bound");
    add_common(sturm, sc);

    ScanArgs na;
    auto* scan = app.add_subcommand("scan", "search progressions on which a sequence vanishes");
    scan->add_option("--target", na.target, "e.g. nu2-mod4, overpartition-mod16, nu2-modN");
    scan->add_option("--moduli", na.moduli, "comma list substituted for N");
    scan->add_option("--amax", na.amax);
    scan->add_option("--bound", na.bound);
    add_common(scan, nc);

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "cross-check the independent nu_k and pbar computations");
    oracle->add_option("--bruteforce-cap", oa.bruteforce_cap);
    oracle->add_option("--dp-bound", oa.dp_bound);
    oracle->add_option("--nu3-bound", oa.nu3_bound);
    oracle->add_option("--op-bound", oa.op_bound);
    oracle->add_flag("--inject-fault", oa.inject_fault, "corrupt one table entry (self-test)");
    add_common(oracle, oc);

    ReportArgs ra;
    auto* rep = app.add_subcommand("report", "export tables");
    rep->add_option("--table", ra.table, "nu | overpartition");
    rep->add_option("--bound", ra.bound);
    rep->add_option("--kmax", ra.kmax);
    rep->add_option("--modulus", ra.modulus, "0 = exact (nu only)");
    add_common(rep, rc, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (threads) set_worker_count(*threads);
        const auto start = std::chrono::steady_clock::now();
        const auto elapsed = [&] {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        };
        if (verify->parsed()) {
            const auto s = load_settings(vc);
            const auto o = cmd_verify(va, s, err);
            return emit(o, s, vc, out, elapsed());
        }
        if (dissect->parsed()) {
            da.long_seen = long_flag->count() > 0;
            const auto s = load_settings(dc);
            const auto o = cmd_dissect(da, s, err);
            return emit(o, s, dc, out, elapsed());
        }
        if (sturm->parsed()) {
            const auto s = load_settings(sc);
            const auto o = cmd_sturm(sa, s);
            return emit(o, s, sc, out, elapsed());
        }
        if (scan->parsed()) {
            const auto s = load_settings(nc);
            const auto o = cmd_scan(na, s, err);
            return emit(o, s, nc, out, elapsed());
        }
        if (oracle->parsed()) {
            const auto s = load_settings(oc);
            const auto o = cmd_oracle(oa, s, err);
            return emit(o, s, oc, out, elapsed());
        }
        const auto s = load_settings(rc);
        std::unique_ptr<std::ofstream> file;
        return cmd_report(ra, s, open_output(s, rc, out, file));
    } catch (const ConsistencyError& e) {
        err << "error: internal inconsistency: " << e.what() << '\n';
        return kExitCounterexample;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace cforge::cli
