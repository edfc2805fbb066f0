#pragma once

// nu_k(n), the number of partitions of n using exactly k distinct part sizes,
// computed three independent ways (enumeration, DP, divisor-sum formulas),
// and overpartition counts two ways.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cforge/arith.hpp"
#include "cforge/qseries.hpp"

namespace cforge::partitions {

inline constexpr unsigned kBruteForceCap = 60;
inline constexpr unsigned kDefaultKmax = 8;
/// Largest bound for exact (modulus 0) tables; p(n) < 2^64 up to here.
inline constexpr std::uint64_t kExactBoundCap = 400;
inline constexpr std::uint64_t kNuTableCellCap = std::uint64_t{1} << 28;

/// Exact nu_k(n) by enumerating every partition of n. ResourceError if n > cap.
std::uint64_t nu_bruteforce(unsigned n, unsigned k, unsigned cap = kBruteForceCap);

/// Smallest n with k distinct sizes is 1 + 2 + ... + k.
constexpr std::uint64_t min_weight(unsigned k) { return std::uint64_t{k} * (k + 1) / 2; }

/// Largest k with k(k+1)/2 <= n.
unsigned max_feasible_k(std::uint64_t n);

/// nu_k(n) for 0 <= n <= bound, 0 <= k <= kmax, reduced mod `modulus`
/// (modulus 0 = exact). Row k = 0 is the indicator of n = 0.
class NuTable {
public:
    NuTable(std::uint64_t bound, unsigned kmax, std::uint64_t modulus);

    std::uint64_t bound() const { return bound_; }
    unsigned kmax() const { return kmax_; }
    std::uint64_t modulus() const { return modulus_; }
    bool exact() const { return modulus_ == 0; }

    /// Throws DomainError when n > bound or k > kmax.
    std::uint64_t value(std::uint64_t n, unsigned k) const;

    /// Test hook for fault-injection fixtures.
    void overwrite(std::uint64_t n, unsigned k, std::uint64_t v);

private:
    friend NuTable nu_table_dp(std::uint64_t, unsigned, std::uint64_t, std::uint64_t);

    std::uint64_t bound_;
    unsigned kmax_;
    std::uint64_t modulus_;
    std::vector<std::vector<std::uint64_t>> rows_;  // rows_[k][n]
};

/// Sweeps part sizes 1..bound keeping (amount, sizes used). O(bound^2 kmax).
/// ResourceError when bound*kmax exceeds cell_cap or, for exact tables,
/// bound > kExactBoundCap.
NuTable nu_table_dp(std::uint64_t bound, unsigned kmax, std::uint64_t modulus,
                    std::uint64_t cell_cap = kNuTableCellCap);

/// (sum_{k=1}^{n-1} d(k)d(n-k) - sigma_1(n) + d(n)) / 2.
/// DomainError if n is 0 or beyond the tables; ConsistencyError if the
/// bracket is odd.
std::int64_t nu2_formula(std::uint64_t n, const arith::DivisorTables& tables);

/// nu_3 from d, sigma_1, sigma_2 and the single and double divisor
/// convolutions, accumulated as 6*nu_3 in integers. O(n^2) per call.
std::int64_t nu3_formula(std::uint64_t n, const arith::DivisorTables& tables);

/// Batch evaluator for nu2/nu3 formulas: precomputes the convolution
/// C(m) = sum d(j)d(m-j) for m <= conv_bound once (O(conv_bound^2)), after
/// which nu2 is O(1) and nu3 is O(n). Past conv_bound, nu2 falls back to a
/// direct O(n) sum and nu3 throws DomainError. `tables` must outlive this.
class NuFormulas {
public:
    NuFormulas(const arith::DivisorTables& tables, std::uint64_t conv_bound);

    std::int64_t nu2(std::uint64_t n) const;
    std::int64_t nu3(std::uint64_t n) const;
    /// sum_{k=1}^{n-1} d(k) d(n-k)
    std::uint64_t divisor_convolution(std::uint64_t n) const;

private:
    const arith::DivisorTables* tables_;
    std::vector<std::uint64_t> conv_;
};

/// pbar(0..bound) mod `modulus`, expanded from f_2 / f_1^2.
qseries::Series overpartition_table(std::uint64_t bound, std::uint64_t modulus);

/// sum_k 2^k nu_k(n) reduced mod the table modulus (exact if the table is).
/// The table must hold every k that can contribute: min(max_feasible_k(n),
/// e - 1) when the modulus is 2^e, max_feasible_k(n) otherwise.
/// DomainError if nu.kmax() is smaller.
std::uint64_t overpartition_from_nu(std::uint64_t n, const NuTable& nu);

/// Writes "n,k,value" rows (header included) for 1 <= n <= bound, 1 <= k <= kmax.
void write_csv(std::ostream& out, const NuTable& nu);

}  // namespace cforge::partitions
