#include "hitcalc/gf2/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <bit>

namespace hitcalc::gf2 {

namespace {

#define HITCALC_AVX2 __attribute__((target("avx2,popcnt")))

HITCALC_AVX2 void xor_into_avx2(Word* dst, const Word* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 4));
        __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a0, b0));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4), _mm256_xor_si256(a1, b1));
    }
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

HITCALC_AVX2 bool dot_parity_avx2(const Word* a, const Word* b, std::size_t n)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
    }
    alignas(32) Word lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    Word r = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < n; ++i)
        r ^= a[i] & b[i];
    return std::popcount(r) & 1;
}

// Nibble-table popcount (Mula et al.), accumulated with sad_epu8.
HITCALC_AVX2 std::size_t popcount_avx2(const Word* a, std::size_t n)
{
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i total = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i lo = _mm256_and_si256(v, low_mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        total = _mm256_add_epi64(total, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) Word lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
    std::size_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i)
        c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

HITCALC_AVX2 bool is_zero_avx2(const Word* a, std::size_t n)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
    Word tail = 0;
    for (; i < n; ++i)
        tail |= a[i];
    return _mm256_testz_si256(acc, acc) && tail == 0;
}

HITCALC_AVX2 std::size_t first_nonzero_word_avx2(const Word* a, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        if (!_mm256_testz_si256(v, v)) {
            for (std::size_t j = i; j < i + 4; ++j)
                if (a[j])
                    return j;
        }
    }
    for (; i < n; ++i)
        if (a[i])
            return i;
    return n;
}

constexpr KernelTable kAvx2{
    "avx2", xor_into_avx2, dot_parity_avx2, popcount_avx2, is_zero_avx2, first_nonzero_word_avx2,
};

}  // namespace

const KernelTable* avx2_kernels()
{
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? &kAvx2 : nullptr;
}

}  // namespace hitcalc::gf2

#else

namespace hitcalc::gf2 {
const KernelTable* avx2_kernels()
{
    return nullptr;
}
}  // namespace hitcalc::gf2

#endif
