#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hitcalc/steenrod/monomial.hpp"

namespace hitcalc {

// Number of monomials of degree d in n variables, C(d+n-1, n-1).
std::uint64_t count_monomials(std::size_t n, unsigned d);

// All degree-d monomials in n variables, ascending lexicographic order.
std::vector<Monomial> enumerate_monomials(std::size_t n, unsigned d);

// The coordinate system P^d_n: a monomial list in the global order together
// with the inverse map, computed arithmetically.
class MonomialSpace {
public:
    MonomialSpace(std::size_t n, unsigned d);

    std::size_t vars() const { return n_; }
    unsigned degree() const { return d_; }
    std::size_t size() const { return monomials_.size(); }
    const Monomial& at(std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    // Throws DomainError when m is not a degree-d monomial in n variables.
    std::size_t index_of(const Monomial& m) const;

private:
    std::size_t n_;
    unsigned d_;
    std::vector<Monomial> monomials_;
    // suffix_count_[m][r]: monomials of degree r in m variables
    std::vector<std::vector<std::uint64_t>> count_;
};

}  // namespace hitcalc
