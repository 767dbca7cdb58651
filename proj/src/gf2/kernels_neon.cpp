#include "hitcalc/gf2/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <bit>

namespace hitcalc::gf2 {

namespace {

void xor_into_neon(Word* dst, const Word* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

bool dot_parity_neon(const Word* a, const Word* b, std::size_t n)
{
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    Word r = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < n; ++i)
        r ^= a[i] & b[i];
    return std::popcount(r) & 1;
}

std::size_t popcount_neon(const Word* a, std::size_t n)
{
    std::size_t c = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t v = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)));
        c += vaddvq_u8(v);
    }
    for (; i < n; ++i)
        c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

bool is_zero_neon(const Word* a, std::size_t n)
{
    uint64x2_t acc = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vorrq_u64(acc, vld1q_u64(a + i));
    Word r = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
    for (; i < n; ++i)
        r |= a[i];
    return r == 0;
}

std::size_t first_nonzero_word_neon(const Word* a, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        if (a[i])
            return i;
    return n;
}

constexpr KernelTable kNeon{
    "neon", xor_into_neon, dot_parity_neon, popcount_neon, is_zero_neon, first_nonzero_word_neon,
};

}  // namespace

const KernelTable* neon_kernels()
{
    return &kNeon;
}

}  // namespace hitcalc::gf2

#else

namespace hitcalc::gf2 {
const KernelTable* neon_kernels()
{
    return nullptr;
}
}  // namespace hitcalc::gf2

#endif
