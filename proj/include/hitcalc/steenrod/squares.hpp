#pragma once

#include <cstddef>

#include "hitcalc/steenrod/arithmetic.hpp"
#include "hitcalc/steenrod/monomial.hpp"

namespace hitcalc {

namespace detail {

template <class F>
void cartan_terms(const Monomial& m, Monomial& out, std::size_t i, unsigned rem, unsigned capacity,
                  F& f)
{
    const unsigned e = m[i];
    if (i + 1 == m.vars()) {
        if (binomial_odd(e, rem)) {
            out[i] = e + rem;
            f(static_cast<const Monomial&>(out));
        }
        return;
    }
    const unsigned rest = capacity - e;
    // k_i ranges over the submasks of e_i (Lucas), largest first.
    for (unsigned s = e;; s = (s - 1) & e) {
        if (s <= rem && rem - s <= rest) {
            out[i] = e + s;
            cartan_terms(m, out, i + 1, rem - s, rest, f);
        }
        if (s == 0)
            break;
    }
}

}  // namespace detail

// Calls f once per monomial of Sq^k(m). Distinct compositions of k give
// distinct monomials, so no term cancels.
template <class F>
void for_each_sq_term(unsigned k, const Monomial& m, F&& f)
{
    const unsigned deg = m.degree();
    if (k > deg || m.vars() == 0)
        return;
    Monomial out = m;
    detail::cartan_terms(m, out, 0, k, deg, f);
}

Polynomial sq_monomial(unsigned k, const Monomial& m);
Polynomial sq(unsigned k, const Polynomial& p);

}  // namespace hitcalc
