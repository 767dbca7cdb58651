#include "hitcalc/gf2/bitrow.hpp"

#include <bit>
#include <string>

#include "hitcalc/errors.hpp"

namespace hitcalc::gf2 {

namespace {

void require_same_length(std::size_t a, std::size_t b)
{
    if (a != b)
        throw DimensionError("bit row length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

BitRow::BitRow(std::size_t length) : words_(words_for(length), 0), length_(length) {}

BitRow::BitRow(std::initializer_list<int> bits) : BitRow(bits.size())
{
    std::size_t i = 0;
    for (int b : bits) {
        if (b & 1)
            set(i);
        ++i;
    }
}

BitRow BitRow::from_indices(std::size_t length, std::span<const std::uint32_t> indices)
{
    BitRow r(length);
    for (std::uint32_t i : indices) {
        if (i >= length)
            throw DimensionError("bit index " + std::to_string(i) + " outside row of length " + std::to_string(length));
        r.flip(i);
    }
    return r;
}

BitRow& BitRow::operator^=(const BitRow& other)
{
    require_same_length(length_, other.length_);
    active_kernels().xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

bool BitRow::dot(const BitRow& other) const
{
    require_same_length(length_, other.length_);
    return active_kernels().dot_parity(words_.data(), other.words_.data(), words_.size());
}

bool BitRow::is_zero() const
{
    return active_kernels().is_zero(words_.data(), words_.size());
}

std::size_t BitRow::popcount() const
{
    return active_kernels().popcount(words_.data(), words_.size());
}

std::size_t BitRow::first_set(std::size_t from) const
{
    if (from >= length_)
        return kNoBit;
    std::size_t w = from / kWordBits;
    Word head = words_[w] & (~Word{0} << (from % kWordBits));
    if (head)
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(head));
    ++w;
    std::size_t rel = active_kernels().first_nonzero_word(words_.data() + w, words_.size() - w);
    if (w + rel >= words_.size())
        return kNoBit;
    return (w + rel) * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w + rel]));
}

std::vector<std::uint32_t> BitRow::set_bits() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word x = words_[w];
        while (x) {
            out.push_back(static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

}  // namespace hitcalc::gf2
