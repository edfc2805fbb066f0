#include <algorithm>

#include "cforge/congruence.hpp"
#include "cforge/errors.hpp"
#include "cforge/parallel.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cforge;
using namespace cforge::congruence;
using cforge::qseries::Series;

TEST_CASE("sturm bounds") {
    CHECK(sturm_bound({4, 64}) == 32);
    CHECK(sturm_bound({4, 46656}) == 31104);
    CHECK(sturm_bound({4, 46656, 3}) == 93312);
    CHECK(sturm_bound({12, 1}) == 1);
    CHECK(sturm_bound({1, 1}) == 1);     // ceiling of 1/12
    CHECK(sturm_bound({2, 11}) == 2);    // 2 * 12 / 12
    CHECK_THROWS_AS(sturm_bound({0, 4}), DomainError);
    CHECK_THROWS_AS(sturm_bound({4, 0}), DomainError);
    CHECK_THROWS_AS(sturm_bound({4, 4, 0}), DomainError);
}

TEST_CASE("unconstrained representations match brute force") {
    const arith::DivisorTables t(3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const auto got = enumerate_representations(unconstrained_query(n), t);
        const auto want = oracle::representations(n);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].x == want[i].x);
            CHECK(got[i].p == want[i].p);
            CHECK(got[i].y == want[i].y);
        }
    }
}

TEST_CASE("residue filters") {
    const arith::DivisorTables t(2000);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        RepresentationQuery q = unconstrained_query(n);
        q.M = 8;
        q.p_residues = std::vector<std::uint64_t>{5};
        q.y_residues = std::vector<std::uint64_t>{1, 3, 5, 7};
        const auto all = oracle::representations(n);
        const auto want = std::count_if(all.begin(), all.end(), [](const oracle::Rep& r) {
            return r.p % 8 == 5 && r.y % 2 == 1;
        });
        CHECK(rep_count(q, t) == static_cast<std::uint64_t>(want));

        RepresentationQuery odd = unconstrained_query(n);
        odd.parity = ValuationParity::any;
        const auto any = rep_count(odd, t);
        odd.parity = ValuationParity::odd;
        CHECK(rep_count(odd, t) + all.size() == any);
    }
    RepresentationQuery bad = unconstrained_query(10);
    bad.M = 4;
    bad.p_residues = std::vector<std::uint64_t>{4};
    CHECK_THROWS_AS(rep_count(bad, t), DomainError);
    CHECK_THROWS_AS(rep_count(unconstrained_query(0), t), DomainError);
    CHECK_THROWS_AS(rep_count(unconstrained_query(2001), t), DomainError);
}

TEST_CASE("the residue table for 36j+30 is consistent") {
    for (const auto& c : r36_classes()) {
        CHECK((c.x_square + c.prime * c.y_square) % 36 == 30);
    }
    CHECK(r36_classes().size() == 12);
    const arith::DivisorTables t(5000);
    for (std::uint64_t n = 30; n <= 5000; n += 36) {
        const auto reps = enumerate_representations(r36_query(n), t);
        const auto all = oracle::representations(n);
        const auto want = std::count_if(all.begin(), all.end(), [](const oracle::Rep& r) {
            return std::any_of(r36_classes().begin(), r36_classes().end(), [&](const RepresentationClass& c) {
                return c.x_square == r.x * r.x % 36 && c.prime == r.p % 36 && c.y_square == r.y * r.y % 36;
            });
        });
        CHECK(reps.size() == static_cast<std::size_t>(want));
    }
}

TEST_CASE("sigma dissection series") {
    const arith::DivisorTables t(500);
    const auto F = build_sigma_dissection(t, 2, 1, false, 1, 500);
    for (std::size_t e = 0; e < 500; ++e) {
        const std::uint64_t want = e % 2 == 1 ? oracle::divisor_sum(e, 1) % 2 : 0;
        CHECK(F[e] == want);
    }
    const auto G = build_sigma_dissection(t, 8, 5, true, 1, 500);
    for (std::size_t e = 5; e < 500; e += 8) CHECK(G[e] == oracle::divisor_sum(e, 1) / 2 % 2);
    const auto scaled = build_sigma_dissection(t, 9, 1, false, 4, 400);
    CHECK(scaled[4] == 1);
    CHECK(scaled[40] == oracle::divisor_sum(10, 1) % 2);
    CHECK_THROWS_AS(build_sigma_dissection(t, 2, 0, false, 1, 10), DomainError);
    CHECK_THROWS_AS(build_sigma_dissection(t, 1, 1, true, 1, 10), DomainError);  // sigma_1(1) is odd
}

TEST_CASE("F and G are theta-like mod 2") {
    const arith::DivisorTables t(20000);
    const auto r = f_g_theta_parity_check(t, 20000);
    CHECK(r.f_matches);
    CHECK(r.g_matches);
    CHECK(r.passed());
}

TEST_CASE("R and T parity certificates") {
    const arith::DivisorTables t(10000);
    const auto r = check_R36(t, 10000);
    CHECK(r.passed());
    const auto T = check_T16(t, 10000);
    CHECK(T.passed());

    // The individual products must be non-trivial for the evenness to mean anything.
    const auto R = build_R36(t, 10001);
    CHECK(R.is_zero());
    const auto F1 = build_sigma_dissection(t, 36, 1, false, 1, 10001);
    const auto G29 = build_sigma_dissection(t, 36, 29, true, 1, 10001);
    CHECK((F1 * G29).nonzero_count() > 0);
}

TEST_CASE("R parity equals representation-count parity") {
    const arith::DivisorTables t(4000);
    const auto R = build_R36(t, 4001);
    for (std::uint64_t n = 1; n <= 4000; ++n) CHECK(R[n] == rep_count(r36_query(n), t) % 2);
}

TEST_CASE("verify_progression finds the smallest counterexample") {
    const Sequence ident{"ident", 1000, [](std::uint64_t n) { return static_cast<std::int64_t>(n); }};
    const auto ok = verify_progression(ident, 6, 0, 3, 1000);
    CHECK(ok.passed());
    CHECK(ok.terms_checked == 166);
    for (const unsigned threads : {1U, 3U}) {
        set_worker_count(threads);
        const auto bad = verify_progression(ident, 4, 2, 3, 1000);
        REQUIRE(bad.counterexample);
        CHECK(bad.counterexample->n == 2);
        const Sequence late{"late", 1000, [](std::uint64_t n) { return n >= 700 && n % 2 == 1 ? 1 : 0; }};
        const auto r = verify_progression(late, 2, 1, 2, 1000);
        REQUIRE(r.counterexample);
        CHECK(r.counterexample->n == 701);
    }
    set_worker_count(0);
    const auto filtered = verify_progression(ident, 1, 0, 5, 100, [](std::uint64_t n) { return n % 5 == 0; });
    CHECK(filtered.passed());
    CHECK(filtered.terms_checked == 20);
    CHECK_THROWS_AS(verify_progression(ident, 4, 4, 2, 10), DomainError);
    CHECK_THROWS_AS(verify_progression(ident, 4, 1, 0, 10), DomainError);
    CHECK_THROWS_AS(verify_progression(ident, 4, 1, 2, 1001), DomainError);
}

TEST_CASE("sequence adapters") {
    const arith::DivisorTables t(200);
    const partitions::NuFormulas f(t, 200);
    const auto nu = partitions::nu_table_dp(200, 3, 0);
    const auto s1 = nu1_sequence(t);
    const auto s2 = nu2_formula_sequence(f, 200);
    const auto s3 = nu3_formula_sequence(f, 200);
    const auto d3 = nu_dp_sequence(nu, 3);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        CHECK(s1.at(n) == static_cast<std::int64_t>(oracle::divisor_count(n)));
        CHECK(s2.at(n) == static_cast<std::int64_t>(nu.value(n, 2)));
        CHECK(s3.at(n) == d3.at(n));
    }
    const auto pbar = series_sequence("pbar", partitions::overpartition_table(50, 1000));
    CHECK(pbar.max_index == 50);
    CHECK(pbar.at(3) == 8);
}

TEST_CASE("identity checks") {
    for (const auto& c : check_dissection_lemmas(400)) {
        CAPTURE(c.id);
        CHECK(c.passed());
    }
    for (const auto& c : check_two_adic_lemma(400)) {
        CAPTURE(c.id);
        CHECK(c.passed());
    }
    for (const auto& c : check_overpartition_chain(400)) {
        CAPTURE(c.id);
        CHECK(c.passed());
    }
    CHECK_THROWS_AS(check_overpartition_chain(63), DomainError);

    Series a(16, 10), b(16, 10);
    b.set(7, 3);
    const auto c = compare_series("x", a, b);
    REQUIRE(c.mismatch);
    CHECK(c.mismatch->exponent == 7);
    CHECK(c.mismatch->rhs == 3);
}

TEST_CASE("the 3-dissection of f2/f1^2 with denominators cleared, from naive products") {
    // f2 f3^8 f18^3 = f1^2 (f6^4 f9^6 + 2q f3 f6^3 f9^3 f18^3 + 4q^2 f3^2 f6^2 f18^6)
    const std::uint64_t m = std::uint64_t{1} << 30;
    const std::size_t trunc = 400;
    auto f = [&](std::uint64_t k) { return oracle::eta_product(k, trunc, m); };
    auto pow = [&](const std::vector<std::uint64_t>& a, int e) {
        std::vector<std::uint64_t> r(trunc, 0);
        r[0] = 1;
        for (int i = 0; i < e; ++i) r = oracle::multiply(r, a, m);
        return r;
    };
    auto mul = [&](std::initializer_list<std::vector<std::uint64_t>> xs) {
        std::vector<std::uint64_t> r(trunc, 0);
        r[0] = 1;
        for (const auto& x : xs) r = oracle::multiply(r, x, m);
        return r;
    };
    auto shifted = [&](std::vector<std::uint64_t> a, std::size_t k, std::uint64_t c) {
        std::vector<std::uint64_t> r(trunc, 0);
        for (std::size_t e = 0; e + k < trunc; ++e) r[e + k] = a[e] * c % m;
        return r;
    };
    const auto f1 = f(1), f2 = f(2), f3 = f(3), f6 = f(6), f9 = f(9), f18 = f(18);
    const auto lhs = mul({f2, pow(f3, 8), pow(f18, 3)});
    const auto t0 = mul({pow(f6, 4), pow(f9, 6)});
    const auto t1 = shifted(mul({f3, pow(f6, 3), pow(f9, 3), pow(f18, 3)}), 1, 2);
    const auto t2 = shifted(mul({pow(f3, 2), pow(f6, 2), pow(f18, 6)}), 2, 4);
    std::vector<std::uint64_t> bracket(trunc);
    for (std::size_t e = 0; e < trunc; ++e) bracket[e] = (t0[e] + t1[e] + t2[e]) % m;
    const auto rhs = mul({pow(f1, 2), bracket});
    for (std::size_t e = 0; e < trunc; ++e) CHECK(lhs[e] == rhs[e]);
}

TEST_CASE("nu3 parity reduction") {
    const arith::DivisorTables t(3000);
    const auto nu = partitions::nu_table_dp(3000, 3, 2);
    for (std::uint64_t n = 30; n <= 3000; n += 36) {
        const auto r = nu3_reduction_check(n, t, nu);
        CAPTURE(n);
        CHECK(r.agrees());
        CHECK(r.passed());
    }
    CHECK_THROWS_AS(nu3_reduction_check(31, t, nu), DomainError);
    const auto odd_mod = partitions::nu_table_dp(100, 3, 3);
    CHECK_THROWS_AS(nu3_reduction_check(66, t, odd_mod), DomainError);
}

TEST_CASE("scan targets") {
    CHECK(parse_scan_target("nu2-mod4").id() == "nu2-mod4");
    CHECK(parse_scan_target("op-mod16").sequence == ScanSequence::overpartition);
    CHECK(parse_scan_target("nu3-mod2").modulus == 2);
    CHECK_THROWS_AS(parse_scan_target("nu2"), DomainError);
    CHECK_THROWS_AS(parse_scan_target("nu9-mod4"), DomainError);
    CHECK_THROWS_AS(parse_scan_target("nu2-modx"), DomainError);
    CHECK_THROWS_AS(parse_scan_target("nu2-mod1"), DomainError);
}

TEST_CASE("scanner") {
    const auto r = scan_progressions(40, 3000, parse_scan_target("nu2-mod4"));
    auto find = [&](std::uint64_t A, std::uint64_t B) {
        return std::find_if(r.candidates.begin(), r.candidates.end(),
                            [&](const ScanCandidate& c) { return c.A == A && c.B == B; });
    };
    REQUIRE(find(16, 14) != r.candidates.end());
    REQUIRE(find(36, 30) != r.candidates.end());
    CHECK(find(36, 30)->flags.conditions_hold());
    CHECK(std::is_sorted(r.candidates.begin(), r.candidates.end(), [](const auto& a, const auto& b) {
        return a.A != b.A ? a.A < b.A : a.B < b.B;
    }));
    // Every reported candidate really vanishes.
    const arith::DivisorTables t(3000);
    for (const auto& c : r.candidates) {
        for (std::uint64_t n = c.B == 0 ? c.A : c.B; n <= 3000; n += c.A) {
            CHECK(partitions::nu2_formula(n, t) % 4 == 0);
        }
    }
    CHECK_THROWS_AS(scan_progressions(kScanAmaxCap + 1, 100, {}), ResourceError);
    CHECK_THROWS_AS(scan_progressions(10, kScanBoundCap + 1, {}), ResourceError);
    CHECK_THROWS_AS(scan_progressions(0, 100, {}), DomainError);
}
