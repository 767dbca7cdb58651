#include "hitcalc/steenrod/enumeration.hpp"

#include <string>

#include "hitcalc/errors.hpp"

namespace hitcalc {

std::uint64_t count_monomials(std::size_t n, unsigned d)
{
    if (n == 0)
        return d == 0 ? 1 : 0;
    // C(d+n-1, n-1) computed incrementally; exact for the sizes in use.
    std::uint64_t c = 1;
    for (std::size_t i = 1; i < n; ++i)
        c = c * (d + i) / i;
    return c;
}

namespace {

void enumerate_into(std::vector<Monomial>& out, Monomial& cur, std::size_t i, std::size_t n, unsigned rem)
{
    if (i + 1 == n) {
        cur[i] = rem;
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= rem; ++e) {
        cur[i] = e;
        enumerate_into(out, cur, i + 1, n, rem - e);
    }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(std::size_t n, unsigned d)
{
    if (n == 0 || n > kMaxVars)
        throw DomainError("variable count must be in 1.." + std::to_string(kMaxVars));
    std::vector<Monomial> out;
    out.reserve(count_monomials(n, d));
    Monomial cur = Monomial::one(n);
    enumerate_into(out, cur, 0, n, d);
    return out;
}

MonomialSpace::MonomialSpace(std::size_t n, unsigned d) : n_(n), d_(d), monomials_(enumerate_monomials(n, d))
{
    count_.assign(n + 1, std::vector<std::uint64_t>(d + 1, 0));
    for (std::size_t m = 1; m <= n; ++m)
        for (unsigned r = 0; r <= d; ++r)
            count_[m][r] = count_monomials(m, r);
}

std::size_t MonomialSpace::index_of(const Monomial& m) const
{
    if (m.vars() != n_ || m.degree() != d_)
        throw DomainError("monomial " + m.to_string() + " is not in degree " + std::to_string(d_) + " with " +
                          std::to_string(n_) + " variables");
    std::uint64_t idx = 0;
    unsigned rem = d_;
    for (std::size_t i = 0; i + 1 < n_; ++i) {
        const std::size_t tail = n_ - i - 1;
        for (unsigned x = 0; x < m[i]; ++x)
            idx += count_[tail][rem - x];
        rem -= m[i];
    }
    return static_cast<std::size_t>(idx);
}

}  // namespace hitcalc
