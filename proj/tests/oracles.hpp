#pragma once

// Slow, independent reference implementations. Nothing here calls into the
// library; every function is written the obvious way so it can be trusted
// as a cross-check at small sizes.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

inline std::uint64_t divisor_count(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k) c += n % k == 0;
    return c;
}

inline std::uint64_t divisor_sum(std::uint64_t n, unsigned power) {
    std::uint64_t s = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        std::uint64_t t = 1;
        for (unsigned i = 0; i < power; ++i) t *= k;
        s += t;
    }
    return s;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

inline bool is_sum_of_two_squares(std::uint64_t n) {
    for (std::uint64_t a = 0; a * a <= n; ++a) {
        for (std::uint64_t b = a; a * a + b * b <= n; ++b) {
            if (a * a + b * b == n) return true;
        }
    }
    return false;
}

/// Coefficients of prod_{k>=1} (1 - q^{scale k}) below trunc, reduced mod m,
/// by multiplying in one binomial at a time.
inline std::vector<std::uint64_t> eta_product(std::uint64_t scale, std::size_t trunc, std::uint64_t m) {
    std::vector<std::uint64_t> c(trunc, 0);
    c[0] = 1 % m;
    for (std::uint64_t k = 1; scale * k < trunc; ++k) {
        const std::uint64_t s = scale * k;
        for (std::size_t e = trunc; e-- > s;) c[e] = (c[e] + m - c[e - s]) % m;
    }
    return c;
}

/// Schoolbook product mod m.
inline std::vector<std::uint64_t> multiply(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b, std::uint64_t m) {
    std::vector<std::uint64_t> c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < c.size() && j < b.size(); ++j) {
            c[i + j] = static_cast<std::uint64_t>((c[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % m);
        }
    }
    return c;
}

/// Visits every partition of n as a non-increasing list of parts.
inline void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit) {
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned largest) {
        if (rest == 0) {
            visit(parts);
            return;
        }
        for (unsigned p = std::min(rest, largest); p >= 1; --p) {
            parts.push_back(p);
            rec(rest - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

/// nu_k(n) for k = 0..n by listing partitions and counting distinct sizes.
inline std::vector<std::uint64_t> nu_row(unsigned n) {
    std::vector<std::uint64_t> row(n + 1, 0);
    for_each_partition(n, [&](const std::vector<unsigned>& parts) {
        const std::set<unsigned> sizes(parts.begin(), parts.end());
        ++row[sizes.size()];
    });
    return row;
}

/// pbar(0..bound) exactly, from prod (1 + q^k) / (1 - q^k) expanded term by term.
inline std::vector<std::uint64_t> overpartitions(std::size_t bound) {
    std::vector<std::uint64_t> c(bound + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= bound; ++k) {
        for (std::size_t e = bound; e >= k; --e) c[e] += c[e - k];  // times (1 + q^k)
        for (std::size_t e = k; e <= bound; ++e) c[e] += c[e - k];  // divided by (1 - q^k)
    }
    return c;
}

struct Rep {
    std::uint64_t x, p, y;
};

/// Every x, y >= 1 and prime p with n = x^2 + p y^2 and the p-adic valuation
/// of y even. Scans all y, then checks divisibility.
inline std::vector<Rep> representations(std::uint64_t n) {
    std::vector<Rep> out;
    for (std::uint64_t x = 1; x * x < n; ++x) {
        for (std::uint64_t y = 1; y * y <= n; ++y) {
            const std::uint64_t rest = n - x * x;
            if (rest % (y * y) != 0) continue;
            const std::uint64_t p = rest / (y * y);
            if (!is_prime(p)) continue;
            unsigned e = 0;
            for (std::uint64_t t = y; t % p == 0; t /= p) ++e;
            if (e % 2 == 0) out.push_back({x, p, y});
        }
    }
    return out;
}

}  // namespace oracle
