#include "cforge/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cforge/errors.hpp"

namespace cforge::arith {

namespace {

// Primes below 2^16 cover trial division for every n < 2^32; larger n fall
// back to odd candidates past the list.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1u << 16;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("divisor sum overflows 64 bits");
    return r;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && (r > n / r)) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_square(std::uint64_t n) {
    const std::uint64_t r = isqrt(n);
    return r * r == n;
}

std::uint64_t Factorization::divisor_count() const {
    std::uint64_t d = 1;
    for (const auto& f : factors) d *= f.exponent + 1;
    return d;
}

std::uint64_t Factorization::divisor_sum(unsigned k) const {
    if (k == 0) return divisor_count();
    std::uint64_t total = 1;
    for (const auto& f : factors) {
        const std::uint64_t base = k == 1 ? f.prime : checked_mul(f.prime, f.prime);
        std::uint64_t term = 1;
        std::uint64_t power = 1;
        for (unsigned e = 0; e < f.exponent; ++e) {
            power = checked_mul(power, base);
            term += power;
        }
        total = checked_mul(total, term);
    }
    return total;
}

unsigned Factorization::exponent_of(std::uint64_t p) const {
    for (const auto& f : factors) {
        if (f.prime == p) return f.exponent;
    }
    return 0;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    Factorization out;
    out.n = n;
    std::uint64_t rest = n;
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.factors.push_back({p, e});
    };
    for (const std::uint32_t p : small_primes()) {
        if (std::uint64_t{p} * p > rest) break;
        take(p);
    }
    if (rest > 1) {
        // Only reached past the cached list when rest has no factor below 2^16.
        std::uint64_t p = std::uint64_t{small_primes().back()} + 2;
        while (p <= rest / p) {
            take(p);
            p += 2;
        }
        if (rest > 1) out.factors.push_back({rest, 1});
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    const auto f = factorize(n);
    return f.factors.size() == 1 && f.factors.front().exponent == 1;
}

DivisorTables::DivisorTables(std::uint64_t bound, std::uint64_t cap) : bound_(bound) {
    if (bound == 0) throw DomainError("divisor tables: bound must be positive");
    if (bound > cap) {
        throw ResourceError("divisor tables: bound " + std::to_string(bound) +
                            " exceeds cap " + std::to_string(cap));
    }
    // sigma_2 stays below 1.65 n^2, so 64-bit entries suffice for bound < 2^31.
    if (bound >= (std::uint64_t{1} << 31)) throw ResourceError("divisor tables: bound too large");

    const std::size_t size = static_cast<std::size_t>(bound) + 1;
    d_.assign(size, 0);
    sigma1_.assign(size, 0);
    sigma2_.assign(size, 0);
    for (std::uint64_t a = 1; a <= bound; ++a) {
        const std::uint64_t a2 = a * a;
        for (std::uint64_t m = a; m <= bound; m += a) {
            d_[m] += 1;
            sigma1_[m] += a;
            sigma2_[m] += a2;
        }
    }
}

std::size_t DivisorTables::check(std::uint64_t n) const {
    if (n == 0 || n > bound_) {
        throw DomainError("divisor tables: index " + std::to_string(n) + " outside [1, " +
                          std::to_string(bound_) + "]");
    }
    return static_cast<std::size_t>(n);
}

unsigned prime_valuation(std::uint64_t p, std::uint64_t y) {
    if (!is_prime(p)) throw DomainError("prime_valuation: " + std::to_string(p) + " is not prime");
    if (y == 0) throw DomainError("prime_valuation: y must be positive");
    unsigned e = 0;
    while (y % p == 0) {
        y /= p;
        ++e;
    }
    return e;
}

bool is_sum_of_two_squares(std::uint64_t n) {
    if (n == 0) return true;
    const auto f = factorize(n);
    return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) {
        return pp.prime % 4 != 3 || pp.exponent % 2 == 0;
    });
}

QuadraticForm parse_quadratic_form(std::string_view id) {
    if (id == "square") return QuadraticForm::square;
    if (id == "sum-of-two-squares") return QuadraticForm::sum_of_two_squares;
    if (id == "generalized-pentagonal-doubled" || id == "pentagonal-doubled") {
        return QuadraticForm::pentagonal_doubled;
    }
    throw DomainError("unknown quadratic form '" + std::string(id) + "'");
}

std::vector<std::uint64_t> attainable_residues(std::uint64_t modulus, QuadraticForm form) {
    if (modulus == 0) throw DomainError("attainable_residues: modulus must be positive");
    if (modulus > (std::uint64_t{1} << 24)) throw ResourceError("attainable_residues: modulus too large");
    std::vector<bool> hit(modulus, false);
    switch (form) {
        case QuadraticForm::square:
            for (std::uint64_t x = 0; x < modulus; ++x) hit[x * x % modulus] = true;
            break;
        case QuadraticForm::sum_of_two_squares: {
            const auto squares = attainable_residues(modulus, QuadraticForm::square);
            for (auto a : squares) {
                for (auto b : squares) hit[(a + b) % modulus] = true;
            }
            break;
        }
        case QuadraticForm::pentagonal_doubled:
            // 2n(3n+1) has integer coefficients, so n in [0, modulus) covers all of Z.
            for (std::uint64_t n = 0; n < modulus; ++n) {
                hit[(2 * n % modulus) * ((3 * n + 1) % modulus) % modulus] = true;
            }
            break;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < modulus; ++r) {
        if (hit[r]) out.push_back(r);
    }
    return out;
}

std::vector<std::uint64_t> attainable_residues(std::uint64_t modulus, std::string_view form_id) {
    return attainable_residues(modulus, parse_quadratic_form(form_id));
}

bool check_d_half_square(std::uint64_t n) {
    if (n == 0 || n % 2 != 0) throw DomainError("check_d_half_square: n must be even and positive");
    const std::uint64_t half = factorize(n / 2).divisor_count();
    return factorize(n).divisor_count() % 8 == (half * half) % 8;
}

bool check_d_half_square(std::uint64_t n, const DivisorTables& tables) {
    if (n == 0 || n % 2 != 0) throw DomainError("check_d_half_square: n must be even and positive");
    const std::uint64_t half = tables.d(n / 2);
    return tables.d(n) % 8 == (half * half) % 8;
}

}  // namespace cforge::arith
