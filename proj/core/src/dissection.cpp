#include "cforge/congruence.hpp"

#include <initializer_list>

#include "cforge/errors.hpp"

namespace cforge::congruence {

namespace {

using qseries::EtaFactor;
using qseries::EtaQuotientSpec;
using qseries::ExtractMode;
using qseries::Series;

Series eta(std::uint64_t lead, std::initializer_list<EtaFactor> factors, std::size_t trunc,
           std::uint64_t modulus, std::int64_t coefficient = 1) {
    EtaQuotientSpec spec;
    spec.leading_power = lead;
    spec.factors.assign(factors.begin(), factors.end());
    const Series s = qseries::expand_eta_quotient(spec, trunc, modulus);
    return coefficient == 1 ? s : qseries::scale(s, coefficient);
}

std::string at_modulus(const char* id, std::uint64_t m) { return std::string(id) + "@" + std::to_string(m); }

void require_trunc(std::size_t trunc, std::size_t minimum, const char* what) {
    if (trunc < minimum) {
        throw DomainError(std::string(what) + ": trunc must be at least " + std::to_string(minimum));
    }
}

}  // namespace

std::vector<IdentityCheck> check_dissection_lemmas(std::size_t trunc, std::span<const std::uint64_t> moduli) {
    require_trunc(trunc, 1, "dissection lemmas");
    std::vector<IdentityCheck> out;
    for (const std::uint64_t m : moduli) {
        // f2/f1^2 = f6^4 f9^6/(f3^8 f18^3) + 2q f6^3 f9^3/f3^7 + 4q^2 f6^2 f18^3/f3^6
        const Series lhs3 = eta(0, {{2, 1}, {1, -2}}, trunc, m);
        const Series rhs3 = eta(0, {{6, 4}, {9, 6}, {3, -8}, {18, -3}}, trunc, m) +
                            eta(1, {{6, 3}, {9, 3}, {3, -7}}, trunc, m, 2) +
                            eta(2, {{6, 2}, {18, 3}, {3, -6}}, trunc, m, 4);
        out.push_back(compare_series(at_modulus("lemma-3", m), lhs3, rhs3));

        // f3^3/f1 = f4^3 f6^2/(f2^2 f12) + q f12^3/f4
        const Series lhs2 = eta(0, {{3, 3}, {1, -1}}, trunc, m);
        const Series rhs2 = eta(0, {{4, 3}, {6, 2}, {2, -2}, {12, -1}}, trunc, m) +
                            eta(1, {{12, 3}, {4, -1}}, trunc, m);
        out.push_back(compare_series(at_modulus("lemma-2", m), lhs2, rhs2));
    }
    return out;
}

std::vector<IdentityCheck> check_two_adic_lemma(std::size_t trunc) {
    require_trunc(trunc, 1, "two-adic lemma");
    std::vector<IdentityCheck> out;
    for (const std::int64_t i : {1, 2, 3}) {
        for (unsigned l = 1; l <= 4; ++l) {
            const std::uint64_t m = std::uint64_t{1} << l;
            const Series lhs = eta(0, {{static_cast<std::uint64_t>(i), std::int64_t{1} << l}}, trunc, m);
            const Series rhs =
                eta(0, {{static_cast<std::uint64_t>(2 * i), std::int64_t{1} << (l - 1)}}, trunc, m);
            out.push_back(compare_series("two-adic:f" + std::to_string(i) + "^" +
                                             std::to_string(1 << l) + "@" + std::to_string(m),
                                         lhs, rhs));
        }
    }
    return out;
}

std::vector<IdentityCheck> check_overpartition_chain(std::size_t trunc) {
    require_trunc(trunc, 64, "overpartition chain");
    constexpr std::uint64_t m = 16;
    std::vector<IdentityCheck> out;

    const std::uint64_t op_bound = 6 * static_cast<std::uint64_t>(trunc) - 1;
    const Series pbar = partitions::overpartition_table(op_bound, m);
    // sum pbar(6n) q^n
    const Series p6 = qseries::extract_progression(pbar, 6, 0, ExtractMode::compress);

    // sum pbar(6n) q^n = f2^4 f12^15/(f1^8 f6^6 f24^6) + 12 q^3 f12^3 f24^2/f6^2  (mod 16)
    const Series even_rhs = eta(0, {{2, 4}, {12, 15}, {1, -8}, {6, -6}, {24, -6}}, trunc, m) +
                            eta(3, {{12, 3}, {24, 2}, {6, -2}}, trunc, m, 12);
    out.push_back(compare_series("op-6n", p6, even_rhs));

    // Terms q^{3n+2}: 24 q^2 f12^15 f6^8 f9^18 / (f24^6 f3^30 f18^6). The fourth power
    // contributes 6 (2q b)^2 a^2 with a^2 b^2 carrying f6^14.
    const Series class2 = qseries::extract_progression(p6, 3, 2);
    const Series class2_rhs =
        eta(2, {{12, 15}, {6, -6}, {24, -6}, {6, 14}, {9, 18}, {3, -30}, {18, -6}}, trunc, m, 24);
    out.push_back(compare_series("op-18n+12", class2, class2_rhs));

    // 24/f3^30 = 24/f6^15 (mod 16)
    out.push_back(compare_series("op-24/f3^30", eta(0, {{3, -30}}, trunc, m, 24),
                                 eta(0, {{6, -15}}, trunc, m, 24)));

    // pbar(6n) with n = 5 (mod 6), i.e. pbar(36n+30), vanishes.
    out.push_back(compare_series("op-36n+30-vanishes", qseries::extract_progression(p6, 6, 5),
                                 Series(m, trunc)));

    // Terms q^{3n+1}: 8q f12^15 f6^15 f9^21/(f6^6 f24^6 f3^31 f18^9) = 8q f9^3/f3.
    const Series class1 = qseries::extract_progression(p6, 3, 1);
    const Series class1_full =
        eta(1, {{12, 15}, {6, -6}, {24, -6}, {6, 15}, {9, 21}, {3, -31}, {18, -9}}, trunc, m, 8);
    out.push_back(compare_series("op-18n+6", class1, class1_full));
    out.push_back(compare_series("op-18n+6-reduced", class1_full, eta(1, {{9, 3}, {3, -1}}, trunc, m, 8)));

    // Terms q^{6n+1}: 8q f12^3 f18^2/(f6^2 f36) = 8q f24.
    const Series class61 = qseries::extract_progression(p6, 6, 1);
    const Series class61_full = eta(1, {{12, 3}, {18, 2}, {6, -2}, {36, -1}}, trunc, m, 8);
    out.push_back(compare_series("op-36n+6", class61, class61_full));
    out.push_back(compare_series("op-36n+6-reduced", class61_full, eta(1, {{24, 1}}, trunc, m, 8)));

    // sum pbar(36n+6) q^n = 8 f4.
    const Series p36 = qseries::extract_progression(p6, 6, 1, ExtractMode::compress);
    out.push_back(compare_series("op-36n+6-compressed", p36, eta(0, {{4, 1}}, p36.trunc(), m, 8)));

    // Exponents 2n(3n+1) of f4 avoid 2, 3, 5 mod 7, so pbar(252n+114) = pbar(36(7n+3)+6) vanishes.
    {
        IdentityCheck c;
        c.id = "pentagonal-mod7";
        c.modulus = 7;
        c.trunc = trunc;
        const auto residues = arith::attainable_residues(7, arith::QuadraticForm::pentagonal_doubled);
        const std::vector<std::uint64_t> expected{0, 1, 4, 6};
        if (residues != expected) {
            c.mismatch = Mismatch{0, residues.size(), expected.size()};
        } else {
            const Series f4 = qseries::eta_factor(4, trunc, m);
            for (std::size_t e = 0; e < trunc; ++e) {
                const std::uint64_t r = e % 7;
                if (f4[e] != 0 && r != 0 && r != 1 && r != 4 && r != 6) {
                    c.mismatch = Mismatch{e, f4[e], 0};
                    break;
                }
            }
        }
        out.push_back(c);
    }
    out.push_back(compare_series("op-252n+114-vanishes", qseries::extract_progression(p36, 7, 3),
                                 Series(m, p36.trunc())));

    // Direct scans of pbar(An+B) for the four main progressions.
    for (const auto& [A, B] : kMainProgressions) {
        IdentityCheck c;
        c.id = "op-direct-" + std::to_string(A) + "n+" + std::to_string(B);
        c.modulus = m;
        c.trunc = pbar.trunc();
        for (std::uint64_t n = B; n < pbar.trunc(); n += A) {
            if (pbar[n] != 0) {
                c.mismatch = Mismatch{n, pbar[n], 0};
                break;
            }
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace cforge::congruence
