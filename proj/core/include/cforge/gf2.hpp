#pragma once

// Word-packed truncated series over GF(2). Bit e of the packed vector is the
// coefficient of q^e; bits at or above trunc are kept clear.

#include <cstdint>
#include <vector>

#include "cforge/qseries.hpp"

namespace cforge::qseries {

class PackedGf2 {
public:
    explicit PackedGf2(std::size_t trunc);
    /// Packs a modulus-2 Series. Throws DomainError for any other modulus.
    explicit PackedGf2(const Series& s);

    std::size_t trunc() const { return trunc_; }
    bool test(std::size_t e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void flip(std::size_t e) { words_[e >> 6] ^= std::uint64_t{1} << (e & 63); }
    std::size_t popcount() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

    Series to_series() const;

    /// Truncated product, trunc = min of the operands. XORs a shifted copy of
    /// the denser operand for every set bit of the sparser one.
    friend PackedGf2 multiply(const PackedGf2& a, const PackedGf2& b);

private:
    void clear_tail();

    std::size_t trunc_;
    std::vector<std::uint64_t> words_;
};

PackedGf2 multiply(const PackedGf2& a, const PackedGf2& b);

}  // namespace cforge::qseries
