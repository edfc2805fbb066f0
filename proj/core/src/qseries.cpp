#include "cforge/qseries.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>

#include "cforge/errors.hpp"
#include "cforge/gf2.hpp"

namespace cforge::qseries {

namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

struct ModArith {
    std::uint64_t m;
    bool wide;  // products need 128 bits

    explicit ModArith(std::uint64_t modulus)
        : m(modulus), wide(modulus > (std::uint64_t{1} << 32)) {}

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;  // a, b < m <= 2^63, no wrap
        return s >= m ? s - m : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (m - b); }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : m - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return wide ? static_cast<std::uint64_t>(static_cast<u128>(a) * b % m) : a * b % m;
    }
    std::uint64_t reduce(std::int64_t v) const {
        const std::int64_t sm = static_cast<std::int64_t>(m);
        std::int64_t r = v % sm;
        if (r < 0) r += sm;
        return static_cast<std::uint64_t>(r);
    }
};

void require_same_modulus(const Series& a, const Series& b, const char* op) {
    if (a.modulus() != b.modulus()) {
        throw DomainError(std::string(op) + ": modulus mismatch (" + std::to_string(a.modulus()) +
                          " vs " + std::to_string(b.modulus()) + ")");
    }
}

std::vector<std::size_t> nonzero_positions(const Series& s, std::size_t limit) {
    std::vector<std::size_t> out;
    const auto c = s.coefficients();
    for (std::size_t e = 0; e < std::min(limit, c.size()); ++e) {
        if (c[e] != 0) out.push_back(e);
    }
    return out;
}

// Inverse of a mod m, or 0 if gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    i128 t = 0, new_t = 1;
    i128 r = m, new_r = a % m;
    while (new_r != 0) {
        const i128 q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) return 0;
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Series::Series(std::uint64_t modulus, std::size_t trunc) : modulus_(modulus) {
    if (modulus < 2) throw DomainError("series: modulus must be at least 2");
    if (modulus > (std::uint64_t{1} << 62)) throw DomainError("series: modulus above 2^62");
    if (trunc == 0) throw DomainError("series: trunc must be positive");
    if (trunc > kMaxTerms) throw ResourceError("series: trunc " + std::to_string(trunc) + " above cap");
    coeffs_.assign(trunc, 0);
}

Series Series::one(std::uint64_t modulus, std::size_t trunc) {
    Series s(modulus, trunc);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(std::uint64_t modulus, std::size_t trunc, std::size_t exponent,
                        std::int64_t coefficient) {
    Series s(modulus, trunc);
    if (exponent < trunc) s.set(exponent, coefficient);
    return s;
}

Series Series::from_integers(std::uint64_t modulus, std::span<const std::int64_t> values) {
    Series s(modulus, values.size());
    const ModArith ar(modulus);
    for (std::size_t e = 0; e < values.size(); ++e) s.coeffs_[e] = ar.reduce(values[e]);
    return s;
}

Series Series::from_residues(std::uint64_t modulus, std::vector<std::uint64_t> residues) {
    Series s(modulus, residues.size());
    for (auto& r : residues) r %= modulus;
    s.coeffs_ = std::move(residues);
    return s;
}

void Series::set(std::size_t e, std::int64_t value) {
    if (e >= coeffs_.size()) throw DomainError("series: exponent beyond truncation");
    coeffs_[e] = ModArith(modulus_).reduce(value);
}

void Series::add_to(std::size_t e, std::uint64_t residue) {
    if (e >= coeffs_.size()) throw DomainError("series: exponent beyond truncation");
    coeffs_[e] = ModArith(modulus_).add(coeffs_[e], residue % modulus_);
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

std::size_t Series::nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c != 0; }));
}

Series Series::truncated(std::size_t new_trunc) const {
    if (new_trunc > trunc()) throw DomainError("series: cannot extend truncation");
    Series s(modulus_, new_trunc);
    std::copy_n(coeffs_.begin(), new_trunc, s.coeffs_.begin());
    return s;
}

Series Series::reduced(std::uint64_t new_modulus) const {
    if (new_modulus < 2 || modulus_ % new_modulus != 0) {
        throw DomainError("series: reduction modulus must divide the current modulus");
    }
    Series s(new_modulus, trunc());
    for (std::size_t e = 0; e < coeffs_.size(); ++e) s.coeffs_[e] = coeffs_[e] % new_modulus;
    return s;
}

Series operator+(const Series& a, const Series& b) {
    require_same_modulus(a, b, "add");
    const ModArith ar(a.modulus());
    const std::size_t t = std::min(a.trunc(), b.trunc());
    std::vector<std::uint64_t> out(t);
    for (std::size_t e = 0; e < t; ++e) out[e] = ar.add(a[e], b[e]);
    return Series::from_residues(a.modulus(), std::move(out));
}

Series operator-(const Series& a, const Series& b) {
    require_same_modulus(a, b, "sub");
    const ModArith ar(a.modulus());
    const std::size_t t = std::min(a.trunc(), b.trunc());
    std::vector<std::uint64_t> out(t);
    for (std::size_t e = 0; e < t; ++e) out[e] = ar.sub(a[e], b[e]);
    return Series::from_residues(a.modulus(), std::move(out));
}

Series operator-(const Series& a) {
    const ModArith ar(a.modulus());
    std::vector<std::uint64_t> out(a.trunc());
    for (std::size_t e = 0; e < out.size(); ++e) out[e] = ar.neg(a[e]);
    return Series::from_residues(a.modulus(), std::move(out));
}

Series scale(const Series& a, std::int64_t c) {
    const ModArith ar(a.modulus());
    const std::uint64_t k = ar.reduce(c);
    std::vector<std::uint64_t> out(a.trunc());
    for (std::size_t e = 0; e < out.size(); ++e) out[e] = ar.mul(a[e], k);
    return Series::from_residues(a.modulus(), std::move(out));
}

Series shift(const Series& a, std::size_t k) {
    Series out(a.modulus(), a.trunc());
    for (std::size_t e = 0; e + k < a.trunc(); ++e) {
        if (a[e] != 0) out.add_to(e + k, a[e]);
    }
    return out;
}

namespace detail {

Series mul_generic(const Series& a, const Series& b) {
    require_same_modulus(a, b, "mul");
    const ModArith ar(a.modulus());
    const std::size_t t = std::min(a.trunc(), b.trunc());
    // Walk the nonzeros of the sparser factor against the other one.
    const bool a_sparser = a.nonzero_count() <= b.nonzero_count();
    const Series& sparse = a_sparser ? a : b;
    const auto dense = (a_sparser ? b : a).coefficients();
    std::vector<std::uint64_t> out(t, 0);
    for (const std::size_t i : nonzero_positions(sparse, t)) {
        const std::uint64_t ci = sparse[i];
        for (std::size_t j = 0; i + j < t; ++j) {
            if (dense[j] != 0) out[i + j] = ar.add(out[i + j], ar.mul(ci, dense[j]));
        }
    }
    return Series::from_residues(a.modulus(), std::move(out));
}

}  // namespace detail

Series operator*(const Series& a, const Series& b) {
    require_same_modulus(a, b, "mul");
    if (a.modulus() == 2) return multiply(PackedGf2(a), PackedGf2(b)).to_series();
    return detail::mul_generic(a, b);
}

Series divide(const Series& a, const Series& b) {
    require_same_modulus(a, b, "divide");
    const ModArith ar(a.modulus());
    const std::uint64_t inv0 = inverse_mod(b[0], b.modulus());
    if (inv0 == 0) {
        throw DomainError("invert: constant term " + std::to_string(b[0]) + " is not a unit mod " +
                          std::to_string(b.modulus()));
    }
    const std::size_t t = std::min(a.trunc(), b.trunc());
    std::vector<std::size_t> support = nonzero_positions(b, t);
    support.erase(support.begin());  // b[0] handled by inv0
    std::vector<std::uint64_t> y(t, 0);
    for (std::size_t n = 0; n < t; ++n) {
        std::uint64_t acc = a[n];
        for (const std::size_t k : support) {
            if (k > n) break;
            if (y[n - k] != 0) acc = ar.sub(acc, ar.mul(b[k], y[n - k]));
        }
        y[n] = ar.mul(acc, inv0);
    }
    return Series::from_residues(a.modulus(), std::move(y));
}

Series invert(const Series& a) { return divide(Series::one(a.modulus(), a.trunc()), a); }

Series eta_factor(std::uint64_t scale, std::size_t trunc, std::uint64_t modulus) {
    if (scale == 0) throw DomainError("eta_factor: scale must be positive");
    Series s(modulus, trunc);
    s.set(0, 1);
    // Pentagonal exponents k(3k-1)/2 and k(3k+1)/2, sign (-1)^k.
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t lo = scale * (k * (3 * k - 1) / 2);
        if (lo >= trunc) break;
        const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        s.set(lo, sign);
        const std::uint64_t hi = scale * (k * (3 * k + 1) / 2);
        if (hi < trunc) s.set(hi, sign);
    }
    return s;
}

EtaQuotientSpec EtaQuotientSpec::normalized() const {
    std::map<std::uint64_t, std::int64_t> merged;
    for (const auto& f : factors) {
        if (f.scale == 0) throw DomainError("eta quotient: scale must be positive");
        merged[f.scale] += f.exponent;
    }
    EtaQuotientSpec out;
    out.leading_power = leading_power;
    for (const auto& [scale, exponent] : merged) {
        if (exponent != 0) out.factors.push_back({scale, exponent});
    }
    return out;
}

Series expand_eta_quotient(const EtaQuotientSpec& spec, std::size_t trunc, std::uint64_t modulus) {
    const EtaQuotientSpec norm = spec.normalized();
    if (trunc <= norm.leading_power) {
        std::clog << "warning: eta quotient with leading power " << norm.leading_power
                  << " has empty support below trunc " << trunc << '\n';
        return Series(modulus, trunc);
    }
    const std::size_t inner = trunc - static_cast<std::size_t>(norm.leading_power);
    Series acc = Series::one(modulus, inner);
    for (const auto& f : norm.factors) {
        const Series base = eta_factor(f.scale, inner, modulus);
        const std::int64_t reps = f.exponent < 0 ? -f.exponent : f.exponent;
        for (std::int64_t r = 0; r < reps; ++r) {
            acc = f.exponent > 0 ? detail::mul_generic(acc, base) : divide(acc, base);
        }
    }
    if (norm.leading_power == 0) return acc;
    Series out(modulus, trunc);
    for (std::size_t e = 0; e < inner; ++e) {
        if (acc[e] != 0) out.add_to(e + norm.leading_power, acc[e]);
    }
    return out;
}

Series extract_progression(const Series& a, std::uint64_t A, std::uint64_t B, ExtractMode mode) {
    if (A == 0) throw DomainError("extract_progression: A must be positive");
    if (B >= A) throw DomainError("extract_progression: residue B must satisfy 0 <= B < A");
    if (mode == ExtractMode::keep) {
        Series out(a.modulus(), a.trunc());
        for (std::size_t e = B; e < a.trunc(); e += A) {
            if (a[e] != 0) out.add_to(e, a[e]);
        }
        return out;
    }
    if (B >= a.trunc()) throw DomainError("extract_progression: residue class empty below trunc");
    const std::size_t count = (a.trunc() - B + A - 1) / A;
    std::vector<std::uint64_t> out(count);
    for (std::size_t n = 0; n < count; ++n) out[n] = a[A * n + B];
    return Series::from_residues(a.modulus(), std::move(out));
}

Series substitute_power(const Series& a, std::uint64_t c) {
    if (c == 0) throw DomainError("substitute_power: c must be positive");
    Series out(a.modulus(), a.trunc());
    for (std::size_t n = 0; n * c < a.trunc(); ++n) {
        if (a[n] != 0) out.add_to(n * c, a[n]);
    }
    return out;
}

Series theta_residue_series(std::uint64_t M, std::uint64_t eps, std::size_t trunc) {
    if (eps == 0 || eps >= M) throw DomainError("theta_residue_series: need 0 < eps < M");
    Series out(2, trunc);
    for (std::uint64_t j = 1; j * j < trunc; ++j) {
        const std::uint64_t r = j % M;
        if (r == eps || r == M - eps) out.set(j * j, 1);
    }
    return out;
}

std::int64_t first_difference(const Series& a, const Series& b) {
    require_same_modulus(a, b, "compare");
    if (a.trunc() != b.trunc()) throw DomainError("compare: truncation mismatch");
    for (std::size_t e = 0; e < a.trunc(); ++e) {
        if (a[e] != b[e]) return static_cast<std::int64_t>(e);
    }
    return -1;
}

void write_dump(std::ostream& out, const Series& s) {
    out << "# modulus " << s.modulus() << " trunc " << s.trunc() << '\n';
    for (std::size_t e = 0; e < s.trunc(); ++e) {
        if (s[e] != 0) out << e << ' ' << s[e] << '\n';
    }
}

Series read_dump(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw DomainError("series dump: missing header");
    std::istringstream header(line);
    std::string hash, kw_mod, kw_trunc;
    std::uint64_t modulus = 0;
    std::size_t trunc = 0;
    if (!(header >> hash >> kw_mod >> modulus >> kw_trunc >> trunc) || hash != "#" ||
        kw_mod != "modulus" || kw_trunc != "trunc") {
        throw DomainError("series dump: malformed header '" + line + "'");
    }
    Series s(modulus, trunc);
    std::int64_t last = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::uint64_t e = 0, c = 0;
        if (!(row >> e >> c) || e >= trunc || c >= modulus ||
            static_cast<std::int64_t>(e) <= last) {
            throw DomainError("series dump: bad line '" + line + "'");
        }
        s.set(e, static_cast<std::int64_t>(c));
        last = static_cast<std::int64_t>(e);
    }
    return s;
}

}  // namespace cforge::qseries
