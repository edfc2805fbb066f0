#pragma once

// Truncated power series over Z/m.
//
// A Series stores the coefficients of q^0 .. q^(trunc-1), each reduced into
// [0, modulus). Binary operations truncate to the shorter operand and never
// extend; modulus mismatches are DomainErrors. For modulus 2, multiplication
// runs on a word-packed GF(2) path (see gf2.hpp).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace cforge::qseries {

class Series {
public:
    static constexpr std::size_t kMaxTerms = std::size_t{1} << 28;

    /// Zero series. Throws DomainError for modulus < 2 or trunc = 0,
    /// ResourceError beyond kMaxTerms.
    Series(std::uint64_t modulus, std::size_t trunc);

    static Series one(std::uint64_t modulus, std::size_t trunc);
    static Series monomial(std::uint64_t modulus, std::size_t trunc, std::size_t exponent,
                           std::int64_t coefficient = 1);
    /// Reduces each (possibly negative) value mod `modulus`; trunc = values.size().
    static Series from_integers(std::uint64_t modulus, std::span<const std::int64_t> values);
    static Series from_residues(std::uint64_t modulus, std::vector<std::uint64_t> residues);

    std::uint64_t modulus() const { return modulus_; }
    std::size_t trunc() const { return coeffs_.size(); }

    /// Coefficient of q^e; reads at e >= trunc return 0.
    std::uint64_t operator[](std::size_t e) const { return e < coeffs_.size() ? coeffs_[e] : 0; }
    std::span<const std::uint64_t> coefficients() const { return coeffs_; }

    /// Builder-style mutation; value is reduced mod modulus.
    void set(std::size_t e, std::int64_t value);
    void add_to(std::size_t e, std::uint64_t residue);

    bool is_zero() const;
    std::size_t nonzero_count() const;
    /// Same coefficients, shorter truncation. Throws if new_trunc > trunc().
    Series truncated(std::size_t new_trunc) const;
    /// Coefficients reinterpreted mod a divisor of the modulus.
    Series reduced(std::uint64_t new_modulus) const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::uint64_t modulus_;
    std::vector<std::uint64_t> coeffs_;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
/// c * a, c reduced mod a.modulus().
Series scale(const Series& a, std::int64_t c);
/// q^k * a, keeping a.trunc().
Series shift(const Series& a, std::size_t k);

inline Series series_add(const Series& a, const Series& b) { return a + b; }
inline Series series_mul(const Series& a, const Series& b) { return a * b; }

/// Two-sided inverse. Throws DomainError if a[0] is not a unit mod modulus.
Series invert(const Series& a);
inline Series series_invert(const Series& a) { return invert(a); }

/// a / b = a * invert(b), computed by one sparse recurrence pass over b.
Series divide(const Series& a, const Series& b);

/// f_i = prod_{k>=1} (1 - q^{ik}) via the pentagonal number theorem.
Series eta_factor(std::uint64_t scale, std::size_t trunc, std::uint64_t modulus);

struct EtaFactor {
    std::uint64_t scale = 1;
    std::int64_t exponent = 0;

    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// q^leading_power * prod f_scale^exponent.
struct EtaQuotientSpec {
    std::uint64_t leading_power = 0;
    std::vector<EtaFactor> factors;

    /// Scales ascending, duplicates merged, zero exponents dropped.
    /// Throws DomainError on scale 0.
    EtaQuotientSpec normalized() const;
};

/// Expands the quotient to `trunc` terms. Positive exponents multiply by
/// sparse f_i, negative ones divide by it, so cost is sum|e_i| * trunc *
/// O(sqrt(trunc / i)). If trunc <= leading_power the result is zero and a
/// warning is written to std::clog.
Series expand_eta_quotient(const EtaQuotientSpec& spec, std::size_t trunc, std::uint64_t modulus);

enum class ExtractMode { keep, compress };

/// keep: zero every exponent not = B (mod A).
/// compress: coefficient of q^{An+B} becomes the coefficient of q^n; the
/// result has trunc = #{n : An+B < a.trunc()}.
/// Throws DomainError for A = 0, B >= A, or an empty compressed class.
Series extract_progression(const Series& a, std::uint64_t A, std::uint64_t B,
                           ExtractMode mode = ExtractMode::keep);

/// a(q^c), same trunc. Throws DomainError for c = 0.
Series substitute_power(const Series& a, std::uint64_t c);

/// sum of q^{j^2} over positive j = +-eps (mod M), mod 2. Each j counted once
/// even when eps = -eps (mod M). Throws DomainError unless 0 < eps < M.
Series theta_residue_series(std::uint64_t M, std::uint64_t eps, std::size_t trunc);

/// First exponent where a and b differ, or -1. Moduli and truncs must match.
std::int64_t first_difference(const Series& a, const Series& b);

/// Debug dump: "# modulus M trunc T" header, then one "exponent coefficient"
/// line per nonzero coefficient, exponents ascending.
void write_dump(std::ostream& out, const Series& s);
/// Inverse of write_dump. Throws DomainError on malformed input.
Series read_dump(std::istream& in);

namespace detail {
/// Schoolbook Cauchy product, any modulus. Used as the reference for the
/// packed GF(2) path.
Series mul_generic(const Series& a, const Series& b);
}  // namespace detail

}  // namespace cforge::qseries
