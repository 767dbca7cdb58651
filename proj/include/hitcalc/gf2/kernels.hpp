#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-level kernels behind every bit-row operation. A scalar reference
// table is always present; vector tables are compiled per target and picked
// at runtime from the CPU feature set. All tables compute identical results.

namespace hitcalc::gf2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kNoBit = static_cast<std::size_t>(-1);

struct KernelTable {
    std::string_view name;
    // dst[i] ^= src[i]
    void (*xor_into)(Word* dst, const Word* src, std::size_t n);
    // parity of popcount(a & b)
    bool (*dot_parity)(const Word* a, const Word* b, std::size_t n);
    std::size_t (*popcount)(const Word* a, std::size_t n);
    bool (*is_zero)(const Word* a, std::size_t n);
    // index of the first word that is nonzero, or n
    std::size_t (*first_nonzero_word)(const Word* a, std::size_t n);
};

const KernelTable& scalar_kernels();
// nullptr when the variant is not compiled in or the CPU lacks the feature.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// The table used by BitRow. Chosen once: the best supported variant, unless
// HITCALC_SIMD=scalar is set in the environment.
const KernelTable& active_kernels();

}  // namespace hitcalc::gf2
