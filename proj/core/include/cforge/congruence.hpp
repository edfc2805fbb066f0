#pragma once

// Congruence checks: Sturm bounds, sigma_1 dissection series and
// their parity checks, representation counting n = x^2 + p y^2, the mod-16
// overpartition dissection chain, the nu_3 parity reduction, and the
// progression scanner.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cforge/arith.hpp"
#include "cforge/partitions.hpp"
#include "cforge/qseries.hpp"

namespace cforge::congruence {

// ---------------------------------------------------------------------------
// Sturm bound

struct SturmInput {
    std::uint64_t weight = 0;
    std::uint64_t level = 0;
    std::uint64_t index_factor = 1;
};

/// ceil((weight/12) N prod_{p|N} (p+1)/p) * index_factor, in exact integer
/// arithmetic. DomainError if any field is zero.
std::uint64_t sturm_bound(const SturmInput& s);

// ---------------------------------------------------------------------------
// Representations n = x^2 + p y^2

enum class ValuationParity { even, odd, any };

/// Allowed (x^2, p, y^2) residue triple mod M.
struct RepresentationClass {
    std::uint64_t x_square = 0;
    std::uint64_t prime = 0;
    std::uint64_t y_square = 0;
};

/// Counts x >= 1, y >= 1, p prime with n = x^2 + p y^2 and the parity
/// constraint on s_p(y). Optional filters: p mod M, y mod M, and a list of
/// coupled (x^2, p, y^2) classes mod M; an empty `classes` list means no
/// coupled constraint.
struct RepresentationQuery {
    std::uint64_t n = 0;
    std::uint64_t M = 1;
    std::optional<std::vector<std::uint64_t>> p_residues;
    std::optional<std::vector<std::uint64_t>> y_residues;
    std::vector<RepresentationClass> classes;
    ValuationParity parity = ValuationParity::even;
};

struct Representation {
    std::uint64_t x = 0;
    std::uint64_t p = 0;
    std::uint64_t y = 0;

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// The residue table for n = 36j + 30: x^2 in {1, 13, 25} pairs with
/// p in {5, 17, 29} (mod 36), x^2 in {4, 16, 28} pairs with p = 2.
const std::vector<RepresentationClass>& r36_classes();
RepresentationQuery r36_query(std::uint64_t n);
/// Any prime, s_p(y) even, no residue filters.
RepresentationQuery unconstrained_query(std::uint64_t n);

/// Primality by sieve lookup; tables must cover n. DomainError if n = 0,
/// M = 0, or a residue is >= M.
std::vector<Representation> enumerate_representations(const RepresentationQuery& q,
                                                       const arith::DivisorTables& tables);
std::uint64_t rep_count(const RepresentationQuery& q, const arith::DivisorTables& tables);

// ---------------------------------------------------------------------------
// sigma_1 dissection series (all mod 2)

/// Coefficient at scale*(Aj+B) is sigma_1(Aj+B) mod 2, or sigma_1(Aj+B)/2
/// mod 2 when `halve` is set (DomainError naming j if that value is odd).
/// Requires B >= 1 and tables covering trunc/scale.
qseries::Series build_sigma_dissection(const arith::DivisorTables& tables, std::uint64_t A,
                                       std::uint64_t B, bool halve, std::uint64_t scale,
                                       std::size_t trunc);

/// One family of sum q^{p y^2}: p prime, p = p_residue (mod p_modulus),
/// y = +-y_eps (mod y_modulus) (y_eps = 0 means any y), s_p(y) even.
struct PrimeSquareFamily {
    std::uint64_t p_modulus = 1;
    std::uint64_t p_residue = 0;
    std::uint64_t y_modulus = 1;
    std::uint64_t y_eps = 0;
};

/// Sum over the families of q^{p y^2}, mod 2.
qseries::Series prime_square_series(const arith::DivisorTables& tables, std::size_t trunc,
                                    std::span<const PrimeSquareFamily> families);

/// R(q) = sum_{i in {1,25,13,4,16,28}} F_{x,i}(q) G_{y,30-i}(q), mod 2.
qseries::Series build_R36(const arith::DivisorTables& tables, std::size_t trunc);

/// T(q) = F(q) G(q) + F(q^4) F(q^2), mod 2, with
/// F = sum sigma_1(2n+1) q^{2n+1}, G = 1/2 sum sigma_1(8n+5) q^{8n+5}.
qseries::Series build_T16(const arith::DivisorTables& tables, std::size_t trunc);

/// Parity certificate for R or T up to and including `bound`.
struct ParityCheck {
    std::string id;
    std::uint64_t bound = 0;
    std::optional<std::uint64_t> first_odd;          // smallest exponent with an odd coefficient
    std::optional<std::uint64_t> first_off_support;  // smallest exponent outside the expected class

    bool passed() const { return !first_odd && !first_off_support; }
};

/// Each product F_{x,i} G_{y,30-i} supported on 30 (mod 36), and R even.
ParityCheck check_R36(const arith::DivisorTables& tables, std::uint64_t bound);
ParityCheck check_T16(const arith::DivisorTables& tables, std::uint64_t bound);

struct ThetaParityResult {
    bool f_matches = false;
    bool g_matches = false;
    std::optional<std::uint64_t> first_f_mismatch;
    std::optional<std::uint64_t> first_g_mismatch;

    bool passed() const { return f_matches && g_matches; }
};

/// F(q) == sum q^{(2n+1)^2} and G(q) == sum_{p=5 (8), y odd, 2|s_p(y)} q^{p y^2},
/// coefficientwise mod 2 below bound.
ThetaParityResult f_g_theta_parity_check(const arith::DivisorTables& tables, std::size_t bound);

// ---------------------------------------------------------------------------
// Progressions

/// Read-only integer sequence, defined on 1..max_index. `at` must be safe to
/// call concurrently.
struct Sequence {
    std::string name;
    std::uint64_t max_index = 0;
    std::function<std::int64_t(std::uint64_t)> at;
};

struct Counterexample {
    std::uint64_t n = 0;
    std::int64_t value = 0;
};

struct ProgressionReport {
    std::string sequence;
    std::uint64_t A = 1;
    std::uint64_t B = 0;
    std::uint64_t modulus = 1;
    std::uint64_t checked_bound = 0;
    std::uint64_t terms_checked = 0;
    std::optional<Counterexample> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

/// Checks value(n) = 0 (mod modulus) for every n = B (mod A), 1 <= n <= bound
/// (and filter(n), if given). Reports the smallest failing n.
/// DomainError if B >= A, modulus = 0, or bound > seq.max_index.
ProgressionReport verify_progression(const Sequence& seq, std::uint64_t A, std::uint64_t B,
                                     std::uint64_t modulus, std::uint64_t bound,
                                     const std::function<bool(std::uint64_t)>& filter = {});

/// Sequence adapters. The referenced tables must outlive the Sequence.
Sequence nu1_sequence(const arith::DivisorTables& tables);
Sequence nu2_formula_sequence(const partitions::NuFormulas& formulas, std::uint64_t max_index);
Sequence nu3_formula_sequence(const partitions::NuFormulas& formulas, std::uint64_t max_index);
Sequence nu_dp_sequence(const partitions::NuTable& table, unsigned k);
Sequence overpartition_nu_sequence(const partitions::NuTable& table);
Sequence series_sequence(std::string name, const qseries::Series& series);

/// The four progressions (A, B) checked for nu_2, nu_3 and pbar.
inline constexpr std::array<std::array<std::uint64_t, 2>, 4> kMainProgressions{{
    {36, 30}, {72, 42}, {196, 70}, {252, 114}}};

// ---------------------------------------------------------------------------
// Identity checks

struct Mismatch {
    std::uint64_t exponent = 0;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
};

struct IdentityCheck {
    std::string id;
    std::uint64_t modulus = 0;
    std::size_t trunc = 0;
    std::optional<Mismatch> mismatch;

    bool passed() const { return !mismatch.has_value(); }
};

/// Compares two series of equal modulus and truncation.
IdentityCheck compare_series(std::string id, const qseries::Series& lhs, const qseries::Series& rhs);

inline constexpr std::uint64_t kPowerOfTwoCheckModulus = std::uint64_t{1} << 30;
inline constexpr std::uint64_t kPrimeCheckModulus = 2147483647;  // 2^31 - 1

/// 3-dissection of f2/f1^2 and 2-dissection of f3^3/f1, at each modulus.
std::vector<IdentityCheck> check_dissection_lemmas(
    std::size_t trunc,
    std::span<const std::uint64_t> moduli = std::array{kPowerOfTwoCheckModulus, kPrimeCheckModulus});

/// f_i^{2^l} = f_{2i}^{2^{l-1}} (mod 2^l), i in {1,2,3}, l in {1..4}.
std::vector<IdentityCheck> check_two_adic_lemma(std::size_t trunc);

/// The mod-16 chain from sum pbar(6n) q^n down to pbar(36n+6), plus the
/// mod-7 pentagonal support argument and direct pbar(An+B) = 0 (mod 16)
/// scans for the four main progressions over every n < 6 * trunc.
std::vector<IdentityCheck> check_overpartition_chain(std::size_t trunc);

// ---------------------------------------------------------------------------
// nu_3 parity reduction for n = 36j + 30

struct Nu3ReductionResult {
    std::uint64_t n = 0;
    unsigned nu3_parity = 0;
    unsigned rhs_parity = 0;
    bool d_sigma2_mod12 = false;  // d(n) + sigma_2(n) = 0 (mod 12)

    bool agrees() const { return nu3_parity == rhs_parity; }
    bool passed() const { return agrees() && nu3_parity == 0 && d_sigma2_mod12; }
};

/// Evaluates  -1/2 sum d(k) sigma_1(n-k)
///            + sum_{j<k<l distinct squares, j+k+l=n} d(j) d(k) d(l)
///            + 1/2 sum_{k <= sqrt((n-1)/2)} d(k^2)^2 d(n - 2k^2)   (mod 2)
/// against nu_3(n) mod 2 from the table. DomainError unless n = 30 (mod 36)
/// and n is inside both tables; ConsistencyError if a halved sum is odd.
Nu3ReductionResult nu3_reduction_check(std::uint64_t n, const arith::DivisorTables& tables,
                                       const partitions::NuTable& nu);

// ---------------------------------------------------------------------------
// Progression scanner

enum class ScanSequence { nu2, nu3, overpartition };

struct ScanTarget {
    ScanSequence sequence = ScanSequence::nu2;
    std::uint64_t modulus = 4;

    /// e.g. "nu2-mod4", "overpartition-mod16".
    std::string id() const;
};

/// Parses "<nu2|nu3|overpartition>-mod<N>". DomainError otherwise.
ScanTarget parse_scan_target(const std::string& id);

/// Empirical conditions over the terms <= bound of a candidate progression.
struct ConditionFlags {
    bool sigma1_mod8 = false;         // sigma_1(n) = 0 (mod 8) on every term
    bool d_half_square = false;       // d(n) = d(n/2)^2 (mod 8) on every even term
    bool avoids_two_squares = false;  // B mod A not a sum of two squares mod A
    bool has_odd_terms = false;
    bool nu2_mod4 = false;            // nu_2(n) = 0 (mod 4) on every term

    bool conditions_hold() const { return sigma1_mod8 && d_half_square && avoids_two_squares; }
};

struct ScanCandidate {
    std::uint64_t A = 0;
    std::uint64_t B = 0;
    std::uint64_t terms = 0;
    ConditionFlags flags;
};

struct ScanResult {
    ScanTarget target;
    std::uint64_t Amax = 0;
    std::uint64_t bound = 0;
    std::vector<ScanCandidate> candidates;  // ordered by (A, B)
};

inline constexpr std::uint64_t kScanBoundCap = 50'000;
inline constexpr std::uint64_t kScanAmaxCap = 5'000;

/// Every (A, B) with A <= Amax, 0 <= B < A, whose target sequence vanishes
/// mod target.modulus on all of its terms 1 <= n <= bound. ResourceError
/// past kScanBoundCap / kScanAmaxCap.
ScanResult scan_progressions(std::uint64_t Amax, std::uint64_t bound, const ScanTarget& target);

}  // namespace cforge::congruence
