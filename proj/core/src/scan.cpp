#include <algorithm>
#include <mutex>
#include <string>

#include "cforge/congruence.hpp"
#include "cforge/errors.hpp"
#include "cforge/parallel.hpp"

namespace cforge::congruence {

std::string ScanTarget::id() const {
    std::string seq;
    switch (sequence) {
        case ScanSequence::nu2: seq = "nu2"; break;
        case ScanSequence::nu3: seq = "nu3"; break;
        case ScanSequence::overpartition: seq = "overpartition"; break;
    }
    return seq + "-mod" + std::to_string(modulus);
}

ScanTarget parse_scan_target(const std::string& id) {
    const auto dash = id.rfind("-mod");
    if (dash == std::string::npos) throw DomainError("scan target '" + id + "': expected <sequence>-mod<N>");
    const std::string seq = id.substr(0, dash);
    const std::string digits = id.substr(dash + 4);
    ScanTarget t;
    if (seq == "nu2") {
        t.sequence = ScanSequence::nu2;
    } else if (seq == "nu3") {
        t.sequence = ScanSequence::nu3;
    } else if (seq == "overpartition" || seq == "op") {
        t.sequence = ScanSequence::overpartition;
    } else {
        throw DomainError("scan target '" + id + "': unknown sequence '" + seq + "'");
    }
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("scan target '" + id + "': modulus must be a positive integer");
    }
    t.modulus = std::stoull(digits);
    if (t.modulus < 2) throw DomainError("scan target '" + id + "': modulus must be at least 2");
    return t;
}

ScanResult scan_progressions(std::uint64_t Amax, std::uint64_t bound, const ScanTarget& target) {
    if (Amax == 0 || bound == 0) throw DomainError("scan: Amax and bound must be positive");
    if (Amax > kScanAmaxCap) throw ResourceError("scan: Amax above cap " + std::to_string(kScanAmaxCap));
    if (bound > kScanBoundCap) throw ResourceError("scan: bound above cap " + std::to_string(kScanBoundCap));
    if (target.modulus < 2) throw DomainError("scan: target modulus must be at least 2");

    const arith::DivisorTables tables(bound);
    const partitions::NuFormulas formulas(tables, bound);

    // Residues of the target sequence for n = 1..bound (index 0 unused).
    std::vector<std::uint64_t> residue(bound + 1, 0);
    std::vector<std::uint8_t> nu2_mod4(bound + 1, 0);
    const auto m = static_cast<std::int64_t>(target.modulus);
    for (std::uint64_t n = 1; n <= bound; ++n) {
        const std::int64_t v2 = formulas.nu2(n);
        nu2_mod4[n] = static_cast<std::uint8_t>(v2 % 4 == 0);
        if (target.sequence == ScanSequence::nu2) residue[n] = static_cast<std::uint64_t>(((v2 % m) + m) % m);
    }
    if (target.sequence == ScanSequence::nu3) {
        const auto table = partitions::nu_table_dp(bound, 3, target.modulus);
        for (std::uint64_t n = 1; n <= bound; ++n) residue[n] = table.value(n, 3);
    } else if (target.sequence == ScanSequence::overpartition) {
        const auto pbar = partitions::overpartition_table(bound, target.modulus);
        for (std::uint64_t n = 1; n <= bound; ++n) residue[n] = pbar[n];
    }

    ScanResult result;
    result.target = target;
    result.Amax = Amax;
    result.bound = bound;

    std::mutex mu;
    parallel_for(1, Amax + 1, [&](std::size_t lo, std::size_t hi) {
        std::vector<ScanCandidate> local;
        for (std::uint64_t A = lo; A < hi; ++A) {
            const auto sos = arith::attainable_residues(A, arith::QuadraticForm::sum_of_two_squares);
            for (std::uint64_t B = 0; B < A; ++B) {
                const std::uint64_t first = B == 0 ? A : B;
                if (first > bound) continue;
                bool vanishes = true;
                std::uint64_t terms = 0;
                for (std::uint64_t n = first; n <= bound; n += A, ++terms) {
                    if (residue[n] != 0) {
                        vanishes = false;
                        break;
                    }
                }
                if (!vanishes) continue;

                ScanCandidate c;
                c.A = A;
                c.B = B;
                c.terms = terms;
                c.flags.sigma1_mod8 = true;
                c.flags.d_half_square = true;
                c.flags.nu2_mod4 = true;
                for (std::uint64_t n = first; n <= bound; n += A) {
                    if (tables.sigma1(n) % 8 != 0) c.flags.sigma1_mod8 = false;
                    if (n % 2 == 0) {
                        if (!arith::check_d_half_square(n, tables)) c.flags.d_half_square = false;
                    } else {
                        c.flags.has_odd_terms = true;
                    }
                    if (!nu2_mod4[n]) c.flags.nu2_mod4 = false;
                }
                c.flags.avoids_two_squares = !std::binary_search(sos.begin(), sos.end(), B % A);
                local.push_back(c);
            }
        }
        std::lock_guard lock(mu);
        result.candidates.insert(result.candidates.end(), local.begin(), local.end());
    });
    std::sort(result.candidates.begin(), result.candidates.end(),
              [](const ScanCandidate& a, const ScanCandidate& b) { return a.A != b.A ? a.A < b.A : a.B < b.B; });
    return result;
}

}  // namespace cforge::congruence
