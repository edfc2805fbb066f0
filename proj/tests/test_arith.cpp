#include <numeric>
#include <random>

#include "cforge/arith.hpp"
#include "cforge/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cforge;
using namespace cforge::arith;

TEST_CASE("factorize reproduces n with increasing primes") {
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const auto f = factorize(n);
        std::uint64_t prod = 1;
        std::uint64_t last = 1;
        for (const auto& pp : f.factors) {
            CHECK(pp.prime > last);
            CHECK(oracle::is_prime(pp.prime));
            for (unsigned i = 0; i < pp.exponent; ++i) prod *= pp.prime;
            last = pp.prime;
        }
        CHECK(prod == n);
    }
    CHECK(factorize(1).factors.empty());
    CHECK_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("factorize handles a large semiprime and prime powers") {
    const std::uint64_t p = 4294967291ULL;  // largest prime below 2^32
    const auto f = factorize(p * 65521);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 65521);
    CHECK(f.factors[1].prime == p);
    CHECK(factorize(std::uint64_t{1} << 40).exponent_of(2) == 40);
    CHECK(factorize(3 * 3 * 3 * 7).exponent_of(5) == 0);
}

TEST_CASE("divisor tables agree with trial division") {
    const DivisorTables t(600);
    for (std::uint64_t n = 1; n <= 600; ++n) {
        CAPTURE(n);
        CHECK(t.d(n) == oracle::divisor_count(n));
        CHECK(t.sigma1(n) == oracle::divisor_sum(n, 1));
        CHECK(t.sigma2(n) == oracle::divisor_sum(n, 2));
        CHECK(t.is_prime(n) == oracle::is_prime(n));
        const auto f = factorize(n);
        CHECK(f.divisor_count() == t.d(n));
        CHECK(f.divisor_sum(1) == t.sigma1(n));
        CHECK(f.divisor_sum(2) == t.sigma2(n));
    }
}

TEST_CASE("divisor tables reject out-of-range access and oversized bounds") {
    const DivisorTables t(10);
    CHECK_THROWS_AS(t.d(0), DomainError);
    CHECK_THROWS_AS(t.sigma1(11), DomainError);
    CHECK_THROWS_AS(DivisorTables(0), DomainError);
    CHECK_THROWS_AS(DivisorTables(1000, 999), ResourceError);
}

TEST_CASE("d and sigma are multiplicative on coprime pairs") {
    const DivisorTables t(1'000'000);
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
    int tried = 0;
    while (tried < 500) {
        const auto a = pick(rng), b = pick(rng);
        if (std::gcd(a, b) != 1) continue;
        ++tried;
        CHECK(t.d(a * b) == t.d(a) * t.d(b));
        CHECK(t.sigma1(a * b) == t.sigma1(a) * t.sigma1(b));
        CHECK(t.sigma2(a * b) == t.sigma2(a) * t.sigma2(b));
    }
}

TEST_CASE("primality, square roots and squares") {
    for (std::uint64_t n = 0; n <= 5000; ++n) {
        CHECK(is_prime(n) == oracle::is_prime(n));
        const auto r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        CHECK(is_square(n) == (r * r == n));
    }
    CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
    CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
}

TEST_CASE("sum of two squares matches exhaustive search") {
    for (std::uint64_t n = 0; n <= 3000; ++n) {
        CAPTURE(n);
        CHECK(is_sum_of_two_squares(n) == oracle::is_sum_of_two_squares(n));
    }
}

TEST_CASE("prime valuation") {
    CHECK(prime_valuation(2, 96) == 5);
    CHECK(prime_valuation(3, 96) == 1);
    CHECK(prime_valuation(5, 96) == 0);
    CHECK_THROWS_AS(prime_valuation(4, 96), DomainError);
    CHECK_THROWS_AS(prime_valuation(3, 0), DomainError);
}

TEST_CASE("attainable residues") {
    SUBCASE("pentagonal doubled mod 7") {
        CHECK(attainable_residues(7, "generalized-pentagonal-doubled") == std::vector<std::uint64_t>{0, 1, 4, 6});
        CHECK(attainable_residues(7, "pentagonal-doubled") == std::vector<std::uint64_t>{0, 1, 4, 6});
    }
    SUBCASE("squares agree with direct enumeration") {
        for (std::uint64_t m = 1; m <= 60; ++m) {
            std::set<std::uint64_t> want;
            for (std::uint64_t x = 0; x < m; ++x) want.insert(x * x % m);
            const auto got = attainable_residues(m, QuadraticForm::square);
            CHECK(got == std::vector<std::uint64_t>(want.begin(), want.end()));
        }
    }
    SUBCASE("sums of two squares agree with direct enumeration") {
        for (std::uint64_t m = 1; m <= 40; ++m) {
            std::set<std::uint64_t> want;
            for (std::uint64_t x = 0; x < m; ++x) {
                for (std::uint64_t y = 0; y < m; ++y) want.insert((x * x + y * y) % m);
            }
            const auto got = attainable_residues(m, QuadraticForm::sum_of_two_squares);
            CHECK(got == std::vector<std::uint64_t>(want.begin(), want.end()));
        }
        // 14 is not a sum of two squares mod 16, and 30 is not mod 36.
        const auto r16 = attainable_residues(16, "sum-of-two-squares");
        CHECK_FALSE(std::binary_search(r16.begin(), r16.end(), 14));
        const auto r36 = attainable_residues(36, "sum-of-two-squares");
        CHECK_FALSE(std::binary_search(r36.begin(), r36.end(), 30));
    }
    CHECK_THROWS_AS(parse_quadratic_form("cube"), DomainError);
    CHECK_THROWS_AS(attainable_residues(0, QuadraticForm::square), DomainError);
}

TEST_CASE("d(n) against d(n/2)^2 mod 8") {
    const DivisorTables t(2000);
    for (std::uint64_t n = 2; n <= 2000; n += 2) {
        const auto half = oracle::divisor_count(n / 2);
        const bool want = (oracle::divisor_count(n) + 8 * 64 - (half * half) % 8) % 8 == 0;
        CHECK(check_d_half_square(n) == want);
        CHECK(check_d_half_square(n, t) == want);
    }
    CHECK_THROWS_AS(check_d_half_square(7), DomainError);
    CHECK_THROWS_AS(check_d_half_square(0), DomainError);
}
