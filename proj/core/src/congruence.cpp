#include "cforge/congruence.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>

#include "cforge/errors.hpp"
#include "cforge/parallel.hpp"

namespace cforge::congruence {

namespace {

__extension__ using u128 = unsigned __int128;

bool contains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

unsigned valuation(std::uint64_t p, std::uint64_t y) {
    unsigned e = 0;
    while (y % p == 0) {
        y /= p;
        ++e;
    }
    return e;
}

void require_cover(const arith::DivisorTables& tables, std::uint64_t top, const char* what) {
    if (top > tables.bound()) {
        throw DomainError(std::string(what) + ": divisor tables end at " + std::to_string(tables.bound()) +
                          ", need " + std::to_string(top));
    }
}

}  // namespace

std::uint64_t sturm_bound(const SturmInput& s) {
    if (s.weight == 0 || s.level == 0 || s.index_factor == 0) {
        throw DomainError("sturm_bound: weight, level and index factor must be positive");
    }
    u128 num = static_cast<u128>(s.weight) * s.level;
    u128 den = 12;
    for (const auto& pp : arith::factorize(s.level).factors) {
        num *= pp.prime + 1;
        den *= pp.prime;
    }
    const u128 base = (num + den - 1) / den;
    const u128 total = base * s.index_factor;
    if (total > std::numeric_limits<std::uint64_t>::max()) throw ResourceError("sturm_bound: overflow");
    return static_cast<std::uint64_t>(total);
}

const std::vector<RepresentationClass>& r36_classes() {
    static const std::vector<RepresentationClass> table = {
        {1, 29, 1},  {1, 17, 25},  {1, 5, 13},
        {13, 17, 1}, {13, 5, 25},  {13, 29, 13},
        {25, 5, 1},  {25, 29, 25}, {25, 17, 13},
        {4, 2, 13},  {16, 2, 25},  {28, 2, 1},
    };
    return table;
}

RepresentationQuery r36_query(std::uint64_t n) {
    RepresentationQuery q;
    q.n = n;
    q.M = 36;
    q.classes = r36_classes();
    return q;
}

RepresentationQuery unconstrained_query(std::uint64_t n) {
    RepresentationQuery q;
    q.n = n;
    return q;
}

std::vector<Representation> enumerate_representations(const RepresentationQuery& q,
                                                       const arith::DivisorTables& tables) {
    if (q.n == 0) throw DomainError("rep_count: n must be positive");
    if (q.M == 0) throw DomainError("rep_count: residue modulus must be positive");
    auto check_set = [&](const std::optional<std::vector<std::uint64_t>>& s) {
        if (s && std::any_of(s->begin(), s->end(), [&](std::uint64_t r) { return r >= q.M; })) {
            throw DomainError("rep_count: residue outside [0, M)");
        }
    };
    check_set(q.p_residues);
    check_set(q.y_residues);
    for (const auto& c : q.classes) {
        if (c.x_square >= q.M || c.prime >= q.M || c.y_square >= q.M) {
            throw DomainError("rep_count: class residue outside [0, M)");
        }
    }
    require_cover(tables, q.n, "rep_count");

    std::vector<Representation> out;
    for (std::uint64_t x = 1; x * x < q.n; ++x) {
        const std::uint64_t rest = q.n - x * x;
        for (std::uint64_t y = 1; 2 * y * y <= rest; ++y) {
            if (rest % (y * y) != 0) continue;
            const std::uint64_t p = rest / (y * y);
            if (!tables.is_prime(p)) continue;
            const unsigned e = valuation(p, y);
            if (q.parity == ValuationParity::even && e % 2 != 0) continue;
            if (q.parity == ValuationParity::odd && e % 2 == 0) continue;
            if (q.p_residues && !contains(*q.p_residues, p % q.M)) continue;
            if (q.y_residues && !contains(*q.y_residues, y % q.M)) continue;
            if (!q.classes.empty()) {
                const std::uint64_t xs = x * x % q.M, pr = p % q.M, ys = y * y % q.M;
                const bool listed = std::any_of(q.classes.begin(), q.classes.end(), [&](const auto& c) {
                    return c.x_square == xs && c.prime == pr && c.y_square == ys;
                });
                if (!listed) continue;
            }
            out.push_back({x, p, y});
        }
    }
    return out;
}

std::uint64_t rep_count(const RepresentationQuery& q, const arith::DivisorTables& tables) {
    return enumerate_representations(q, tables).size();
}

qseries::Series build_sigma_dissection(const arith::DivisorTables& tables, std::uint64_t A,
                                       std::uint64_t B, bool halve, std::uint64_t scale,
                                       std::size_t trunc) {
    if (A == 0 || scale == 0) throw DomainError("sigma dissection: A and scale must be positive");
    if (B == 0) throw DomainError("sigma dissection: B must be positive (sigma_1(0) is undefined)");
    qseries::Series out(2, trunc);
    for (std::uint64_t j = 0;; ++j) {
        const std::uint64_t m = A * j + B;
        if (scale * m >= trunc) break;
        std::uint64_t v = tables.sigma1(m);
        if (halve) {
            if (v % 2 != 0) {
                throw DomainError("sigma dissection: sigma_1(" + std::to_string(A) + "*" +
                                  std::to_string(j) + "+" + std::to_string(B) + ") = " +
                                  std::to_string(v) + " is odd, cannot halve (j = " +
                                  std::to_string(j) + ")");
            }
            v /= 2;
        }
        out.set(scale * m, static_cast<std::int64_t>(v % 2));
    }
    return out;
}

qseries::Series prime_square_series(const arith::DivisorTables& tables, std::size_t trunc,
                                    std::span<const PrimeSquareFamily> families) {
    qseries::Series out(2, trunc);
    if (trunc > 2) require_cover(tables, trunc - 1, "prime_square_series");
    for (const auto& fam : families) {
        if (fam.p_modulus == 0 || fam.y_modulus == 0) throw DomainError("prime_square_series: zero modulus");
        for (std::uint64_t p = 2; p < trunc; ++p) {
            if (p % fam.p_modulus != fam.p_residue % fam.p_modulus || !tables.is_prime(p)) continue;
            for (std::uint64_t y = 1; p * y * y < trunc; ++y) {
                if (fam.y_eps != 0) {
                    const std::uint64_t r = y % fam.y_modulus;
                    if (r != fam.y_eps && r != fam.y_modulus - fam.y_eps) continue;
                }
                if (valuation(p, y) % 2 != 0) continue;
                out.add_to(p * y * y, 1);
            }
        }
    }
    return out;
}

namespace {

// The six products F_{x,i} G_{y,30-i}, in the order i = 1, 25, 13, 4, 16, 28.
std::vector<qseries::Series> r36_products(const arith::DivisorTables& tables, std::size_t trunc) {
    require_cover(tables, trunc > 1 ? trunc - 1 : 1, "build_R36");
    // x-side: F_{x,i} for odd i directly; F_{x,l} for l = 4, 16, 28 from
    // sigma_1(9j + l/4) at q^4. y-side: G_{y,2m} from sigma_1(18j + m) at q^2
    // and halved G_{y,k} for k = 29, 17, 5.
    const auto F = [&](std::uint64_t i) {
        return i % 2 == 1 ? build_sigma_dissection(tables, 36, i, false, 1, trunc)
                          : build_sigma_dissection(tables, 9, i / 4, false, 4, trunc);
    };
    const auto G = [&](std::uint64_t k) {
        return k % 2 == 1 ? build_sigma_dissection(tables, 36, k, true, 1, trunc)
                          : build_sigma_dissection(tables, 18, k / 2, false, 2, trunc);
    };
    std::vector<qseries::Series> out;
    for (const std::uint64_t i : {1, 25, 13, 4, 16, 28}) out.push_back(F(i) * G(30 - i));
    return out;
}

std::optional<std::uint64_t> first_nonzero(const qseries::Series& s) {
    for (std::size_t e = 0; e < s.trunc(); ++e) {
        if (s[e] != 0) return e;
    }
    return std::nullopt;
}

}  // namespace

qseries::Series build_R36(const arith::DivisorTables& tables, std::size_t trunc) {
    qseries::Series R(2, trunc);
    for (const auto& term : r36_products(tables, trunc)) R = R + term;
    return R;
}

ParityCheck check_R36(const arith::DivisorTables& tables, std::uint64_t bound) {
    ParityCheck c;
    c.id = "R36";
    c.bound = bound;
    const auto terms = r36_products(tables, static_cast<std::size_t>(bound) + 1);
    qseries::Series R(2, static_cast<std::size_t>(bound) + 1);
    for (const auto& term : terms) {
        for (std::size_t e = 0; e < term.trunc(); ++e) {
            if (term[e] != 0 && e % 36 != 30 && (!c.first_off_support || e < *c.first_off_support)) {
                c.first_off_support = e;
                break;
            }
        }
        R = R + term;
    }
    c.first_odd = first_nonzero(R);
    return c;
}

ParityCheck check_T16(const arith::DivisorTables& tables, std::uint64_t bound) {
    ParityCheck c;
    c.id = "T16";
    c.bound = bound;
    const auto T = build_T16(tables, static_cast<std::size_t>(bound) + 1);
    c.first_odd = first_nonzero(T);
    return c;
}

qseries::Series build_T16(const arith::DivisorTables& tables, std::size_t trunc) {
    require_cover(tables, trunc > 1 ? trunc - 1 : 1, "build_T16");
    const auto F = build_sigma_dissection(tables, 2, 1, false, 1, trunc);
    const auto G = build_sigma_dissection(tables, 8, 5, true, 1, trunc);
    return F * G + qseries::substitute_power(F, 4) * qseries::substitute_power(F, 2);
}

ThetaParityResult f_g_theta_parity_check(const arith::DivisorTables& tables, std::size_t bound) {
    require_cover(tables, bound > 1 ? bound - 1 : 1, "f_g_theta_parity_check");
    ThetaParityResult r;
    const auto F = build_sigma_dissection(tables, 2, 1, false, 1, bound);
    const auto G = build_sigma_dissection(tables, 8, 5, true, 1, bound);
    const auto odd_squares = qseries::theta_residue_series(2, 1, bound);
    const std::array fam{PrimeSquareFamily{8, 5, 2, 1}};
    const auto reps = prime_square_series(tables, bound, fam);
    const auto df = qseries::first_difference(F, odd_squares);
    const auto dg = qseries::first_difference(G, reps);
    r.f_matches = df < 0;
    r.g_matches = dg < 0;
    if (df >= 0) r.first_f_mismatch = static_cast<std::uint64_t>(df);
    if (dg >= 0) r.first_g_mismatch = static_cast<std::uint64_t>(dg);
    return r;
}

ProgressionReport verify_progression(const Sequence& seq, std::uint64_t A, std::uint64_t B,
                                     std::uint64_t modulus, std::uint64_t bound,
                                     const std::function<bool(std::uint64_t)>& filter) {
    if (A == 0 || B >= A) throw DomainError("verify_progression: need 0 <= B < A");
    if (modulus == 0 || modulus > (std::uint64_t{1} << 62)) {
        throw DomainError("verify_progression: modulus out of range");
    }
    if (bound > seq.max_index) {
        throw DomainError("verify_progression: sequence '" + seq.name + "' is defined only up to " +
                          std::to_string(seq.max_index) + ", bound is " + std::to_string(bound));
    }
    ProgressionReport rep;
    rep.sequence = seq.name;
    rep.A = A;
    rep.B = B;
    rep.modulus = modulus;
    rep.checked_bound = bound;

    const std::uint64_t first = B == 0 ? A : B;
    const std::uint64_t count = first > bound ? 0 : (bound - first) / A + 1;
    const auto m = static_cast<std::int64_t>(modulus);

    std::mutex mu;
    std::uint64_t best = count;  // index of smallest failing term
    std::int64_t best_value = 0;
    std::uint64_t checked = 0;
    parallel_for(0, count, [&](std::size_t lo, std::size_t hi) {
        std::uint64_t local_checked = 0;
        for (std::size_t t = lo; t < hi; ++t) {
            const std::uint64_t n = first + t * A;
            if (filter && !filter(n)) continue;
            ++local_checked;
            const std::int64_t v = seq.at(n);
            if (v % m != 0) {
                std::lock_guard lock(mu);
                if (t < best) {
                    best = t;
                    best_value = v;
                }
                break;
            }
        }
        std::lock_guard lock(mu);
        checked += local_checked;
    });
    rep.terms_checked = checked;
    if (best < count) rep.counterexample = Counterexample{first + best * A, best_value};
    return rep;
}

Sequence nu1_sequence(const arith::DivisorTables& tables) {
    return {"nu1", tables.bound(), [&tables](std::uint64_t n) { return std::int64_t{tables.d(n)}; }};
}

Sequence nu2_formula_sequence(const partitions::NuFormulas& formulas, std::uint64_t max_index) {
    return {"nu2", max_index, [&formulas](std::uint64_t n) { return formulas.nu2(n); }};
}

Sequence nu3_formula_sequence(const partitions::NuFormulas& formulas, std::uint64_t max_index) {
    return {"nu3", max_index, [&formulas](std::uint64_t n) { return formulas.nu3(n); }};
}

Sequence nu_dp_sequence(const partitions::NuTable& table, unsigned k) {
    return {"nu" + std::to_string(k), table.bound(), [&table, k](std::uint64_t n) {
                return static_cast<std::int64_t>(table.value(n, k));
            }};
}

Sequence overpartition_nu_sequence(const partitions::NuTable& table) {
    return {"overpartition", table.bound(), [&table](std::uint64_t n) {
                return static_cast<std::int64_t>(partitions::overpartition_from_nu(n, table));
            }};
}

Sequence series_sequence(std::string name, const qseries::Series& series) {
    auto held = std::make_shared<const qseries::Series>(series);
    const std::uint64_t top = series.trunc() - 1;
    return {std::move(name), top,
            [held](std::uint64_t n) { return static_cast<std::int64_t>((*held)[n]); }};
}

IdentityCheck compare_series(std::string id, const qseries::Series& lhs, const qseries::Series& rhs) {
    IdentityCheck c;
    c.id = std::move(id);
    c.modulus = lhs.modulus();
    c.trunc = lhs.trunc();
    const auto at = qseries::first_difference(lhs, rhs);
    if (at >= 0) {
        const auto e = static_cast<std::size_t>(at);
        c.mismatch = Mismatch{e, lhs[e], rhs[e]};
    }
    return c;
}

Nu3ReductionResult nu3_reduction_check(std::uint64_t n, const arith::DivisorTables& tables,
                                       const partitions::NuTable& nu) {
    if (n % 36 != 30) throw DomainError("nu3_reduction_check: n must be 30 mod 36");
    require_cover(tables, n, "nu3_reduction_check");
    if (n > nu.bound() || nu.kmax() < 3) throw DomainError("nu3_reduction_check: nu table too small");
    if (!nu.exact() && nu.modulus() % 2 != 0) {
        throw DomainError("nu3_reduction_check: nu table modulus must be even or exact");
    }

    u128 d_sigma = 0;
    for (std::uint64_t k = 1; k < n; ++k) d_sigma += static_cast<u128>(tables.d(k)) * tables.sigma1(n - k);
    if (d_sigma % 2 != 0) {
        throw ConsistencyError("nu3 reduction: sum d(k) sigma_1(n-k) is odd at n = " + std::to_string(n));
    }

    std::uint64_t three_squares = 0;
    for (std::uint64_t a = 1; 3 * a * a < n; ++a) {
        for (std::uint64_t b = a + 1; a * a + 2 * b * b < n; ++b) {
            const std::uint64_t c2 = n - a * a - b * b;
            if (c2 <= b * b || !arith::is_square(c2)) continue;
            three_squares += std::uint64_t{tables.d(a * a)} * tables.d(b * b) * tables.d(c2);
        }
    }

    std::uint64_t twice_square = 0;
    for (std::uint64_t k = 1; 2 * k * k <= n - 1; ++k) {
        const std::uint64_t dk = tables.d(k * k);
        twice_square += dk * dk * tables.d(n - 2 * k * k);
    }
    if (twice_square % 2 != 0) {
        throw ConsistencyError("nu3 reduction: sum d(k^2)^2 d(n-2k^2) is odd at n = " + std::to_string(n));
    }

    Nu3ReductionResult r;
    r.n = n;
    const auto half_ds = static_cast<std::uint64_t>((d_sigma / 2) % 2);
    r.rhs_parity = static_cast<unsigned>((half_ds + three_squares + twice_square / 2) % 2);
    r.nu3_parity = static_cast<unsigned>(nu.value(n, 3) % 2);
    r.d_sigma2_mod12 = (tables.d(n) + tables.sigma2(n)) % 12 == 0;
    return r;
}

}  // namespace cforge::congruence
