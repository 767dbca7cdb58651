#pragma once

#include <bit>
#include <cstdint>

namespace hitcalc {

// C(a, b) mod 2 for a, b >= 0, by Lucas: odd iff the bits of b are a subset
// of the bits of a.
constexpr bool binomial_odd(std::uint64_t a, std::uint64_t b)
{
    return b <= a && (b & ~a) == 0;
}

// Number of ones in the binary expansion.
constexpr unsigned alpha(std::uint64_t m)
{
    return static_cast<unsigned>(std::popcount(m));
}

// Least r >= 0 with alpha(l + r) <= r.
constexpr unsigned mu(std::uint64_t l)
{
    unsigned r = 0;
    while (alpha(l + r) > r)
        ++r;
    return r;
}

struct GenericDegree {
    std::uint64_t degree = 0;
    // mu(l) < k, the side condition of the generic form
    bool mu_below_k = false;
};

// k(2^t - 1) + l 2^t.
constexpr GenericDegree generic_degree(std::uint64_t k, unsigned t, std::uint64_t l)
{
    const std::uint64_t p = std::uint64_t{1} << t;
    return {k * (p - 1) + l * p, mu(l) < k};
}

}  // namespace hitcalc
