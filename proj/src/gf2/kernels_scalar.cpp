#include "hitcalc/gf2/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <string_view>

namespace hitcalc::gf2 {

namespace {

void xor_into_scalar(Word* dst, const Word* src, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] ^= src[i];
}

bool dot_parity_scalar(const Word* a, const Word* b, std::size_t n)
{
    Word acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc ^= a[i] & b[i];
    return std::popcount(acc) & 1;
}

std::size_t popcount_scalar(const Word* a, std::size_t n)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += static_cast<std::size_t>(std::popcount(a[i]));
    return c;
}

bool is_zero_scalar(const Word* a, std::size_t n)
{
    Word acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc |= a[i];
    return acc == 0;
}

std::size_t first_nonzero_word_scalar(const Word* a, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        if (a[i])
            return i;
    return n;
}

constexpr KernelTable kScalar{
    "scalar", xor_into_scalar, dot_parity_scalar, popcount_scalar, is_zero_scalar, first_nonzero_word_scalar,
};

const KernelTable& choose()
{
    if (const char* env = std::getenv("HITCALC_SIMD"); env && std::string_view(env) == "scalar")
        return kScalar;
    if (const KernelTable* t = avx2_kernels())
        return *t;
    if (const KernelTable* t = neon_kernels())
        return *t;
    return kScalar;
}

}  // namespace

const KernelTable& scalar_kernels()
{
    return kScalar;
}

const KernelTable& active_kernels()
{
    static const KernelTable& table = choose();
    return table;
}

}  // namespace hitcalc::gf2
