// Acceptance suite: one PASS/FAIL line per criterion. `--long` extends the
// R(q) parity certificate to its full bound.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cforge/arith.hpp"
#include "cforge/congruence.hpp"
#include "cforge/partitions.hpp"
#include "cforge/qseries.hpp"
#include "oracles.hpp"

namespace cg = cforge::congruence;
namespace pt = cforge::partitions;
using cforge::arith::DivisorTables;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::string label(std::uint64_t A, std::uint64_t B) { return std::to_string(A) + "n+" + std::to_string(B); }

void require_progressions(Outcome& o, const cg::Sequence& seq, std::uint64_t modulus, std::uint64_t bound) {
    for (const auto& [A, B] : cg::kMainProgressions) {
        const auto r = cg::verify_progression(seq, A, B, modulus, bound);
        if (!r.passed()) {
            o.fail(seq.name + " on " + label(A, B) + ": n=" + std::to_string(r.counterexample->n) +
                   " value=" + std::to_string(r.counterexample->value));
        }
    }
}

Outcome c01_oracle_equivalence() {
    Outcome o;
    const DivisorTables t(120);
    const auto dp = pt::nu_table_dp(120, 3, 0);
    for (std::uint64_t n = 1; n <= 120; ++n) {
        const auto f2 = static_cast<std::uint64_t>(pt::nu2_formula(n, t));
        if (f2 != dp.value(n, 2)) o.fail("nu2 formula/dp differ at n=" + std::to_string(n));
        if (n <= 80 && static_cast<std::uint64_t>(pt::nu3_formula(n, t)) != dp.value(n, 3)) {
            o.fail("nu3 formula/dp differ at n=" + std::to_string(n));
        }
        if (n <= 60) {
            const auto row = oracle::nu_row(static_cast<unsigned>(n));
            for (unsigned k : {2U, 3U}) {
                const std::uint64_t want = k < row.size() ? row[k] : 0;
                const auto brute = pt::nu_bruteforce(static_cast<unsigned>(n), k);
                if (brute != want || dp.value(n, k) != want) {
                    o.fail("k=" + std::to_string(k) + " n=" + std::to_string(n) + ": enumeration " +
                           std::to_string(want) + ", bruteforce " + std::to_string(brute) + ", dp " +
                           std::to_string(dp.value(n, k)));
                }
            }
        }
    }
    return o;
}

Outcome c02_small_values() {
    Outcome o;
    const DivisorTables t(10);
    if (pt::nu2_formula(5, t) != 5) o.fail("nu2(5) = " + std::to_string(pt::nu2_formula(5, t)));
    if (pt::nu_table_dp(5, 2, 0).value(5, 2) != 5) o.fail("dp nu2(5) != 5");
    const auto pbar = pt::overpartition_table(3, std::uint64_t{1} << 40);
    if (pbar[3] != 8) o.fail("pbar(3) = " + std::to_string(pbar[3]));
    if (oracle::overpartitions(3)[3] != 8) o.fail("oracle pbar(3) != 8");
    return o;
}

Outcome c03_overpartition_identity() {
    Outcome o;
    constexpr std::uint64_t m = std::uint64_t{1} << 20;
    const auto series = pt::overpartition_table(500, m);
    const auto nu = pt::nu_table_dp(500, 19, m);
    for (std::uint64_t n = 0; n <= 500; ++n) {
        const auto via_nu = pt::overpartition_from_nu(n, nu);
        if (via_nu != series[n]) {
            o.fail("n=" + std::to_string(n) + ": series " + std::to_string(series[n]) + ", weighted nu " +
                   std::to_string(via_nu));
        }
    }
    return o;
}

Outcome c04_mod8_off_squares() {
    Outcome o;
    const auto seq = cg::series_sequence("pbar", pt::overpartition_table(20000, 8));
    const auto r = cg::verify_progression(seq, 1, 0, 8, 20000, [](std::uint64_t n) {
        return !cforge::arith::is_square(n) && !(n % 2 == 0 && cforge::arith::is_square(n / 2));
    });
    if (!r.passed()) o.fail("pbar(" + std::to_string(r.counterexample->n) + ") not 0 mod 8");
    if (r.terms_checked != 20000 - 141 - 100) o.fail("unexpected term count " + std::to_string(r.terms_checked));
    return o;
}

Outcome c05_nu2_16n14() {
    Outcome o;
    const DivisorTables t(20000);
    const pt::NuFormulas f(t, 0);
    const auto r = cg::verify_progression(cg::nu2_formula_sequence(f, 20000), 16, 14, 4, 20000);
    if (!r.passed()) o.fail("nu2(" + std::to_string(r.counterexample->n) + ") not 0 mod 4");
    return o;
}

Outcome c06_nu2_main() {
    Outcome o;
    const DivisorTables t(50000);
    const pt::NuFormulas f(t, 0);
    require_progressions(o, cg::nu2_formula_sequence(f, 50000), 4, 50000);
    return o;
}

Outcome c07_overpartition_main() {
    Outcome o;
    require_progressions(o, cg::series_sequence("pbar", pt::overpartition_table(50000, 16)), 16, 50000);
    return o;
}

Outcome c08_nu3_main() {
    Outcome o;
    const auto nu = pt::nu_table_dp(20000, 3, 2);
    require_progressions(o, cg::nu_dp_sequence(nu, 3), 2, 20000);
    return o;
}

Outcome c09_lemmas() {
    Outcome o;
    const auto checks = cg::check_dissection_lemmas(2000);
    if (checks.size() != 4) o.fail("expected two lemmas at two moduli");
    for (const auto& c : checks) {
        if (!c.passed()) o.fail(c.id + " mismatch at exponent " + std::to_string(c.mismatch->exponent));
    }
    return o;
}

Outcome c10_overpartition_chain() {
    Outcome o;
    const std::vector<std::string> required{"op-6n", "op-18n+12", "op-36n+6", "op-36n+6-reduced", "pentagonal-mod7"};
    const auto checks = cg::check_overpartition_chain(2000);
    for (const auto& id : required) {
        const auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& c) { return c.id == id; });
        if (it == checks.end()) o.fail("missing check " + id);
    }
    for (const auto& c : checks) {
        if (!c.passed()) o.fail(c.id + " mismatch at exponent " + std::to_string(c.mismatch->exponent));
    }
    std::vector<std::uint64_t> residues;
    for (std::int64_t n = -7; n < 7; ++n) residues.push_back(static_cast<std::uint64_t>(((2 * n * (3 * n + 1)) % 7 + 7) % 7));
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    if (residues != std::vector<std::uint64_t>{0, 1, 4, 6}) o.fail("pentagonal residues mod 7 unexpected");
    if (cforge::arith::attainable_residues(7, "generalized-pentagonal-doubled") != residues) {
        o.fail("library residue set differs from {0,1,4,6}");
    }
    return o;
}

Outcome c11_sturm() {
    Outcome o;
    const std::vector<std::pair<cg::SturmInput, std::uint64_t>> cases{
        {{4, 64, 1}, 32}, {{4, 46656, 1}, 31104}, {{4, 46656, 3}, 93312}};
    for (const auto& [in, want] : cases) {
        const auto got = cg::sturm_bound(in);
        if (got != want) o.fail("level " + std::to_string(in.level) + ": " + std::to_string(got));
    }
    return o;
}

Outcome c12_parity_certificates(bool long_run) {
    Outcome o;
    const std::uint64_t r_bound = long_run ? 93312 : 10000;
    const DivisorTables t(r_bound);
    const auto r = cg::check_R36(t, r_bound);
    if (r.first_off_support) o.fail("R term off 36j+30 at q^" + std::to_string(*r.first_off_support));
    if (r.first_odd) o.fail("R odd at q^" + std::to_string(*r.first_odd));
    for (const std::uint64_t b : {32, 10000}) {
        const auto T = cg::check_T16(t, b);
        if (!T.passed()) o.fail("T odd at q^" + std::to_string(*T.first_odd));
    }
    if (!cg::f_g_theta_parity_check(t, 10000).passed()) o.fail("F/G theta parity");
    return o;
}

Outcome c13_cross_path_parity() {
    Outcome o;
    const DivisorTables t(10000);
    const auto R = cg::build_R36(t, 10001);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const auto reps = cg::rep_count(cg::r36_query(n), t);
        if (R[n] != reps % 2) {
            o.fail("n=" + std::to_string(n) + ": R coefficient " + std::to_string(R[n]) + ", count " + std::to_string(reps));
        }
    }
    return o;
}

Outcome c14_nu3_reduction() {
    Outcome o;
    const DivisorTables t(5000);
    const auto nu = pt::nu_table_dp(5000, 3, 2);
    for (std::uint64_t n = 30; n <= 5000; n += 36) {
        const auto r = cg::nu3_reduction_check(n, t, nu);
        if (!r.agrees()) o.fail("n=" + std::to_string(n) + ": nu3 parity " + std::to_string(r.nu3_parity) +
                                ", reduction " + std::to_string(r.rhs_parity));
        if (!r.d_sigma2_mod12) o.fail("n=" + std::to_string(n) + ": d + sigma2 not 0 mod 12");
        if (r.nu3_parity != 0) o.fail("n=" + std::to_string(n) + ": nu3 odd");
        if ((oracle::divisor_count(n) + oracle::divisor_sum(n, 2)) % 12 != 0) o.fail("oracle d + sigma2 check");
    }
    return o;
}

Outcome c15_scanner() {
    Outcome o;
    const auto r = cg::scan_progressions(40, 5000, cg::parse_scan_target("nu2-mod4"));
    for (const auto& [A, B] : {std::pair<std::uint64_t, std::uint64_t>{16, 14}, {36, 30}}) {
        const auto it = std::find_if(r.candidates.begin(), r.candidates.end(),
                                     [&](const auto& c) { return c.A == A && c.B == B; });
        if (it == r.candidates.end()) {
            o.fail(label(A, B) + " not reported");
            continue;
        }
        const auto& f = it->flags;
        if (!f.sigma1_mod8 || !f.d_half_square || !f.avoids_two_squares) o.fail(label(A, B) + " flags not all true");
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    for (int i = 1; i < argc; ++i) {
        const std::string_view a = argv[i];
        if (a == "--long") {
            long_run = true;
        } else {
            std::fprintf(stderr, "usage: %s [--long]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"nu2/nu3 closed forms, dp and enumeration agree", c01_oracle_equivalence},
        {"nu2(5) = 5 and pbar(3) = 8", c02_small_values},
        {"pbar(n) = sum 2^k nu_k(n) mod 2^20, n <= 500", c03_overpartition_identity},
        {"pbar(n) = 0 mod 8 off squares and twice squares, n <= 20000", c04_mod8_off_squares},
        {"nu2(16n+14) = 0 mod 4 to 20000", c05_nu2_16n14},
        {"nu2 = 0 mod 4 on the four progressions to 50000", c06_nu2_main},
        {"pbar = 0 mod 16 on the four progressions to 50000", c07_overpartition_main},
        {"nu3 = 0 mod 2 on the four progressions to 20000", c08_nu3_main},
        {"2- and 3-dissection identities at 2^30 and 2^31-1, trunc 2000", c09_lemmas},
        {"mod-16 overpartition chain and mod-7 pentagonal residues, trunc 2000", c10_overpartition_chain},
        {"Sturm bounds 32, 31104, 93312", c11_sturm},
        {long_run ? "R(q) even to 93312, T(q) even to 32 and 10000" : "R(q) even to 10000, T(q) even to 32 and 10000",
         [long_run] { return c12_parity_certificates(long_run); }},
        {"R(q) parity equals representation-count parity to 10000", c13_cross_path_parity},
        {"nu3 parity reduction on 36j+30 to 5000", c14_nu3_reduction},
        {"scanner finds 16n+14 and 36n+30 with all conditions", c15_scanner},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2zu: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    secs, o.ok ? "" : " -- ", o.detail.c_str());
        std::fflush(stdout);
        failures += o.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
