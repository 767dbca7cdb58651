#include "hitcalc/steenrod/squares.hpp"

#include <vector>

namespace hitcalc {

Polynomial sq_monomial(unsigned k, const Monomial& m)
{
    std::vector<Monomial> terms;
    for_each_sq_term(k, m, [&](const Monomial& t) { terms.push_back(t); });
    return Polynomial(m.vars(), std::move(terms));
}

Polynomial sq(unsigned k, const Polynomial& p)
{
    std::vector<Monomial> terms;
    for (const Monomial& m : p.terms())
        for_each_sq_term(k, m, [&](const Monomial& t) { terms.push_back(t); });
    return Polynomial(p.vars(), std::move(terms));
}

}  // namespace hitcalc
