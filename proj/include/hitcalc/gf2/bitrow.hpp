#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "hitcalc/gf2/kernels.hpp"

namespace hitcalc::gf2 {

// A fixed-length vector over F2, packed 64 coordinates per word. Bits past
// length() are always zero, so word-level comparisons are exact.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t length);
    BitRow(std::initializer_list<int> bits);

    static BitRow from_indices(std::size_t length, std::span<const std::uint32_t> indices);

    std::size_t length() const { return length_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    // Throws DimensionError on length mismatch.
    BitRow& operator^=(const BitRow& other);
    friend BitRow operator^(BitRow a, const BitRow& b) { return a ^= b; }

    // Inner product over F2. Throws DimensionError on length mismatch.
    bool dot(const BitRow& other) const;

    bool is_zero() const;
    std::size_t popcount() const;
    // kNoBit when there is no set bit at or after `from`.
    std::size_t first_set(std::size_t from = 0) const;
    std::vector<std::uint32_t> set_bits() const;

    friend bool operator==(const BitRow&, const BitRow&) = default;
    friend auto operator<=>(const BitRow& a, const BitRow& b)
    {
        if (auto c = a.length_ <=> b.length_; c != 0)
            return c;
        return a.words_ <=> b.words_;
    }

private:
    std::vector<Word> words_;
    std::size_t length_ = 0;
};

inline std::size_t words_for(std::size_t bits)
{
    return (bits + kWordBits - 1) / kWordBits;
}

}  // namespace hitcalc::gf2
