#include "cforge/partitions.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "cforge/errors.hpp"

namespace cforge::partitions {

namespace {

__extension__ using i128 = __int128;

// Counts partitions of `remaining` into sizes < `below`, each used at least
// once, that bring the number of distinct sizes to exactly `want`.
std::uint64_t count_exact_sizes(unsigned remaining, unsigned below, unsigned used, unsigned want) {
    if (remaining == 0) return used == want ? 1 : 0;
    if (used == want) return 0;
    std::uint64_t total = 0;
    for (unsigned s = std::min(below - 1, remaining); s >= 1; --s) {
        for (unsigned taken = s; taken <= remaining; taken += s) {
            total += count_exact_sizes(remaining - taken, s, used + 1, want);
        }
    }
    return total;
}

std::int64_t narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw ResourceError(std::string(what) + ": value exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

void require_in_tables(std::uint64_t n, const arith::DivisorTables& tables, const char* what) {
    if (n == 0 || n > tables.bound()) {
        throw DomainError(std::string(what) + ": n = " + std::to_string(n) + " outside [1, " +
                          std::to_string(tables.bound()) + "]");
    }
}

i128 direct_convolution(std::uint64_t n, const arith::DivisorTables& t) {
    i128 sum = 0;
    for (std::uint64_t k = 1; k < n; ++k) sum += i128{t.d(k)} * t.d(n - k);
    return sum;
}

std::int64_t nu2_from_parts(std::uint64_t n, i128 conv, const arith::DivisorTables& t) {
    const i128 twice = conv - i128{t.sigma1(n)} + i128{t.d(n)};
    if (twice % 2 != 0) {
        throw ConsistencyError("nu2 formula: odd bracket at n = " + std::to_string(n));
    }
    return narrow(twice / 2, "nu2 formula");
}

// 6 nu_3(n) given the double convolution C(m) for m < n.
template <typename ConvFn>
std::int64_t nu3_from_parts(std::uint64_t n, const arith::DivisorTables& t, ConvFn conv) {
    i128 d_sigma = 0;
    for (std::uint64_t k = 1; k < n; ++k) d_sigma += i128{t.d(k)} * t.sigma1(n - k);
    i128 triple = 0;
    for (std::uint64_t k = 1; k + 2 <= n; ++k) triple += i128{t.d(k)} * conv(n - k);
    const i128 six = 2 * i128{t.d(n)} - 3 * i128{t.sigma1(n)} + i128{t.sigma2(n)} - 3 * d_sigma +
                     3 * conv(n) + triple;
    if (six % 6 != 0) {
        throw ConsistencyError("nu3 formula: 6*nu3 not divisible by 6 at n = " + std::to_string(n));
    }
    return narrow(six / 6, "nu3 formula");
}

}  // namespace

std::uint64_t nu_bruteforce(unsigned n, unsigned k, unsigned cap) {
    if (n > cap) {
        throw ResourceError("nu_bruteforce: n = " + std::to_string(n) + " above cap " +
                            std::to_string(cap));
    }
    if (k == 0) return n == 0 ? 1 : 0;
    return count_exact_sizes(n, n + 1, 0, k);
}

unsigned max_feasible_k(std::uint64_t n) {
    unsigned k = 0;
    while (min_weight(k + 1) <= n) ++k;
    return k;
}

NuTable::NuTable(std::uint64_t bound, unsigned kmax, std::uint64_t modulus)
    : bound_(bound), kmax_(kmax), modulus_(modulus) {
    if (kmax == 0) throw DomainError("nu table: kmax must be positive");
    if (modulus == 1) throw DomainError("nu table: modulus must be 0 (exact) or >= 2");
    rows_.assign(kmax + 1, std::vector<std::uint64_t>(bound + 1, 0));
    rows_[0][0] = 1;
}

std::uint64_t NuTable::value(std::uint64_t n, unsigned k) const {
    if (n > bound_ || k > kmax_) {
        throw DomainError("nu table: (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) +
                          ") outside table");
    }
    return rows_[k][n];
}

void NuTable::overwrite(std::uint64_t n, unsigned k, std::uint64_t v) {
    if (n > bound_ || k > kmax_) throw DomainError("nu table: overwrite outside table");
    rows_[k][n] = modulus_ == 0 ? v : v % modulus_;
}

NuTable nu_table_dp(std::uint64_t bound, unsigned kmax, std::uint64_t modulus, std::uint64_t cell_cap) {
    if (bound == 0) throw DomainError("nu_table_dp: bound must be positive");
    if ((bound + 1) * (kmax + 1) > cell_cap) {
        throw ResourceError("nu_table_dp: bound * kmax exceeds cell cap " + std::to_string(cell_cap));
    }
    if (modulus == 0 && bound > kExactBoundCap) {
        throw ResourceError("nu_table_dp: exact tables are limited to bound " +
                            std::to_string(kExactBoundCap));
    }
    NuTable table(bound, kmax, modulus);
    auto& rows = table.rows_;
    const std::uint64_t m = modulus;
    auto add = [m](std::uint64_t a, std::uint64_t b) {
        const std::uint64_t s = a + b;
        return (m != 0 && s >= m) ? s - m : s;
    };

    // Selecting size s with multiplicity j >= 1 moves (amount, k-1) to
    // (amount + js, k). g[x] = sum_{j>=1} old_{k-1}[x - js] obeys
    // g[x] = old_{k-1}[x - s] + g[x - s].
    std::vector<std::uint64_t> g(bound + 1, 0);
    for (std::uint64_t s = 1; s <= bound; ++s) {
        for (unsigned k = kmax; k >= 1; --k) {
            // k-1 smaller distinct sizes weigh at least min_weight(k-1).
            const std::uint64_t start = s + min_weight(k - 1);
            if (start > bound) continue;
            const auto& prev = rows[k - 1];
            auto& cur = rows[k];
            // g is zero below `start`.
            for (std::uint64_t x = start; x <= bound; ++x) {
                g[x] = add(prev[x - s], x - s >= start ? g[x - s] : 0);
                cur[x] = add(cur[x], g[x]);
            }
        }
    }
    return table;
}

std::int64_t nu2_formula(std::uint64_t n, const arith::DivisorTables& tables) {
    require_in_tables(n, tables, "nu2_formula");
    return nu2_from_parts(n, direct_convolution(n, tables), tables);
}

std::int64_t nu3_formula(std::uint64_t n, const arith::DivisorTables& tables) {
    require_in_tables(n, tables, "nu3_formula");
    std::vector<i128> conv(n + 1, 0);
    for (std::uint64_t m = 2; m <= n; ++m) conv[m] = direct_convolution(m, tables);
    return nu3_from_parts(n, tables, [&](std::uint64_t m) { return conv[m]; });
}

NuFormulas::NuFormulas(const arith::DivisorTables& tables, std::uint64_t conv_bound)
    : tables_(&tables), conv_(std::min(conv_bound, tables.bound()) + 1, 0) {
    for (std::uint64_t m = 2; m < conv_.size(); ++m) {
        conv_[m] = static_cast<std::uint64_t>(direct_convolution(m, tables));
    }
}

std::uint64_t NuFormulas::divisor_convolution(std::uint64_t n) const {
    require_in_tables(n, *tables_, "divisor_convolution");
    if (n < conv_.size()) return conv_[n];
    return static_cast<std::uint64_t>(direct_convolution(n, *tables_));
}

std::int64_t NuFormulas::nu2(std::uint64_t n) const {
    require_in_tables(n, *tables_, "nu2_formula");
    return nu2_from_parts(n, divisor_convolution(n), *tables_);
}

std::int64_t NuFormulas::nu3(std::uint64_t n) const {
    require_in_tables(n, *tables_, "nu3_formula");
    if (n >= conv_.size()) {
        throw DomainError("nu3: n = " + std::to_string(n) + " beyond precomputed convolution");
    }
    return nu3_from_parts(n, *tables_, [&](std::uint64_t m) { return i128{conv_[m]}; });
}

qseries::Series overpartition_table(std::uint64_t bound, std::uint64_t modulus) {
    qseries::EtaQuotientSpec spec;
    spec.factors = {{2, 1}, {1, -2}};
    return qseries::expand_eta_quotient(spec, static_cast<std::size_t>(bound) + 1, modulus);
}

std::uint64_t overpartition_from_nu(std::uint64_t n, const NuTable& nu) {
    if (n > nu.bound()) throw DomainError("overpartition_from_nu: n beyond table");
    if (n == 0) return 1;
    const std::uint64_t m = nu.modulus();
    unsigned needed = max_feasible_k(n);
    if (m != 0 && (m & (m - 1)) == 0) {
        // 2^k vanishes mod 2^e once k >= e.
        const unsigned e = static_cast<unsigned>(__builtin_ctzll(m));
        needed = std::min(needed, e - 1);
    }
    if (nu.kmax() < needed) {
        throw DomainError("overpartition_from_nu: kmax " + std::to_string(nu.kmax()) +
                          " below required " + std::to_string(needed) + " at n = " + std::to_string(n));
    }
    i128 total = 0;
    for (unsigned k = 1; k <= needed; ++k) {
        const i128 term = (i128{1} << k) * nu.value(n, k);
        total = m == 0 ? total + term : (total + term) % m;
    }
    if (m == 0 && total > static_cast<i128>(UINT64_MAX)) {
        throw ResourceError("overpartition_from_nu: exact value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(total);
}

void write_csv(std::ostream& out, const NuTable& nu) {
    out << "n,k,value\n";
    for (std::uint64_t n = 1; n <= nu.bound(); ++n) {
        for (unsigned k = 1; k <= nu.kmax(); ++k) out << n << ',' << k << ',' << nu.value(n, k) << '\n';
    }
}

}  // namespace cforge::partitions
