#pragma once

// Integer arithmetic substrate: factorization, divisor-function sieves,
// valuations and small quadratic-residue analysis.

#include <cstdint>
#include <string_view>
#include <vector>

namespace cforge::arith {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent with primes strictly increasing. Empty for n = 1.
struct Factorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;

    std::uint64_t divisor_count() const;
    /// sigma_k(n) for k in {0, 1, 2}. Throws ResourceError on overflow.
    std::uint64_t divisor_sum(unsigned k) const;
    /// Exponent of p in n (0 if p does not divide n).
    unsigned exponent_of(std::uint64_t p) const;
};

/// Deterministic trial division against a cached prime list. Throws
/// DomainError for n = 0.
Factorization factorize(std::uint64_t n);

/// Trial-division primality.
bool is_prime(std::uint64_t n);

/// Read-only tables of d(n), sigma_1(n), sigma_2(n) for 1 <= n <= bound,
/// filled by an O(N log N) divisor sieve. Index 0 is never exposed.
class DivisorTables {
public:
    static constexpr std::uint64_t kDefaultCap = 20'000'000;

    /// Throws DomainError for bound = 0, ResourceError when bound > cap.
    explicit DivisorTables(std::uint64_t bound, std::uint64_t cap = kDefaultCap);

    std::uint64_t bound() const { return bound_; }

    /// All accessors throw DomainError unless 1 <= n <= bound().
    std::uint32_t d(std::uint64_t n) const { return d_[check(n)]; }
    std::uint64_t sigma1(std::uint64_t n) const { return sigma1_[check(n)]; }
    std::uint64_t sigma2(std::uint64_t n) const { return sigma2_[check(n)]; }
    /// Sieve lookup: n is prime iff d(n) = 2.
    bool is_prime(std::uint64_t n) const { return d_[check(n)] == 2; }

private:
    std::size_t check(std::uint64_t n) const;

    std::uint64_t bound_;
    std::vector<std::uint32_t> d_;
    std::vector<std::uint64_t> sigma1_;
    std::vector<std::uint64_t> sigma2_;
};

inline DivisorTables build_divisor_tables(std::uint64_t bound,
                                          std::uint64_t cap = DivisorTables::kDefaultCap) {
    return DivisorTables(bound, cap);
}

/// Largest e with p^e | y. Throws DomainError if p is not prime or y = 0.
unsigned prime_valuation(std::uint64_t p, std::uint64_t y);

/// True iff n = x^2 + y^2 for some x, y >= 0 (primes = 3 mod 4 to even order).
bool is_sum_of_two_squares(std::uint64_t n);

/// True iff n is a perfect square (0 included).
bool is_square(std::uint64_t n);

/// Integer square root, floor(sqrt(n)).
std::uint64_t isqrt(std::uint64_t n);

enum class QuadraticForm {
    square,              // x^2
    sum_of_two_squares,  // x^2 + y^2
    pentagonal_doubled,  // 2n(3n+1), n in Z
};

/// Accepts "square", "sum-of-two-squares", "generalized-pentagonal-doubled"
/// (alias "pentagonal-doubled"). Throws DomainError otherwise.
QuadraticForm parse_quadratic_form(std::string_view id);

/// Exact residues mod `modulus` attained by the form, by enumeration over a
/// full period. Sorted ascending.
std::vector<std::uint64_t> attainable_residues(std::uint64_t modulus, QuadraticForm form);
std::vector<std::uint64_t> attainable_residues(std::uint64_t modulus, std::string_view form_id);

/// d(n) == d(n/2)^2 (mod 8). Throws DomainError for odd or zero n.
bool check_d_half_square(std::uint64_t n);
bool check_d_half_square(std::uint64_t n, const DivisorTables& tables);

}  // namespace cforge::arith
