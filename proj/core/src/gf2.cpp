#include "cforge/gf2.hpp"

#include <algorithm>
#include <bit>

#include "cforge/errors.hpp"

namespace cforge::qseries {

PackedGf2::PackedGf2(std::size_t trunc) : trunc_(trunc), words_((trunc + 63) / 64, 0) {
    if (trunc == 0) throw DomainError("packed gf2: trunc must be positive");
}

PackedGf2::PackedGf2(const Series& s) : PackedGf2(s.trunc()) {
    if (s.modulus() != 2) throw DomainError("packed gf2: series modulus must be 2");
    const auto c = s.coefficients();
    for (std::size_t e = 0; e < c.size(); ++e) {
        if (c[e] != 0) words_[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
}

std::size_t PackedGf2::popcount() const {
    std::size_t n = 0;
    for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

Series PackedGf2::to_series() const {
    std::vector<std::uint64_t> out(trunc_, 0);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            out[w * 64 + static_cast<std::size_t>(b)] = 1;
            bits &= bits - 1;
        }
    }
    return Series::from_residues(2, std::move(out));
}

void PackedGf2::clear_tail() {
    const std::size_t used = trunc_ & 63;
    if (used != 0) words_.back() &= (std::uint64_t{1} << used) - 1;
}

PackedGf2 multiply(const PackedGf2& a, const PackedGf2& b) {
    const std::size_t t = std::min(a.trunc_, b.trunc_);
    PackedGf2 out(t);
    const bool a_sparser = a.popcount() <= b.popcount();
    const PackedGf2& sparse = a_sparser ? a : b;
    const std::vector<std::uint64_t>& dense = (a_sparser ? b : a).words_;
    const std::size_t nwords = out.words_.size();

    for (std::size_t w = 0; w < sparse.words_.size() && w < nwords; ++w) {
        std::uint64_t bits = sparse.words_[w];
        while (bits != 0) {
            const unsigned bit = static_cast<unsigned>(std::countr_zero(bits));
            bits &= bits - 1;
            const std::size_t i = w * 64 + bit;
            if (i >= t) break;
            // out ^= dense << i, word-shifted by w and bit-shifted by `bit`.
            std::uint64_t* dst = out.words_.data() + w;
            const std::size_t span = nwords - w;
            const std::size_t avail = std::min(span, dense.size());
            if (bit == 0) {
                for (std::size_t j = 0; j < avail; ++j) dst[j] ^= dense[j];
            } else {
                const unsigned back = 64 - bit;
                dst[0] ^= dense[0] << bit;
                for (std::size_t j = 1; j < avail; ++j) {
                    dst[j] ^= (dense[j] << bit) | (dense[j - 1] >> back);
                }
                if (avail < span) dst[avail] ^= dense[avail - 1] >> back;
            }
        }
    }
    out.clear_tail();
    return out;
}

}  // namespace cforge::qseries
