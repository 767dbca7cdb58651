#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/budget.hpp"
#include "hitcalc/gf2/echelon.hpp"
#include "hitcalc/steenrod/arithmetic.hpp"
#include "hitcalc/steenrod/enumeration.hpp"
#include "hitcalc/steenrod/monomial.hpp"

namespace hitcalc::homology {

// a_1^{(d_1)} ... a_n^{(d_n)}, the dual of u_1^{d_1} ... u_n^{d_n}. Shares the
// enumeration index of that monomial.
class DMonomial {
public:
    DMonomial() = default;
    explicit DMonomial(Monomial exponents) : e_(exponents) {}
    DMonomial(std::initializer_list<unsigned> exponents) : e_(exponents) {}

    std::size_t vars() const { return e_.vars(); }
    unsigned degree() const { return e_.degree(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const Monomial& dual() const { return e_; }

    friend bool operator==(const DMonomial&, const DMonomial&) = default;
    friend std::strong_ordering operator<=>(const DMonomial& a, const DMonomial& b) { return a.e_ <=> b.e_; }

    // `(d1).(d2)....`
    std::string to_string() const;
    static DMonomial parse(std::string_view text);

private:
    Monomial e_;
};

// F2 sum of d-monomials in n variables; sorted, distinct terms.
class DElement {
public:
    explicit DElement(std::size_t vars = 0) : n_(vars) {}
    DElement(std::size_t vars, std::vector<DMonomial> terms);  // cancels repeats
    static DElement of(const DMonomial& m);

    std::size_t vars() const { return n_; }
    const std::vector<DMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    long homogeneous_degree() const;

    DElement& operator+=(const DElement& other);
    friend DElement operator+(DElement a, const DElement& b) { return a += b; }
    friend bool operator==(const DElement&, const DElement&) = default;

    std::string to_string() const;
    static DElement parse(std::string_view text, std::size_t vars = 0);

private:
    std::size_t n_ = 0;
    std::vector<DMonomial> terms_;
};

// Kronecker pairing: number of (d-monomial, monomial) matches, mod 2.
// Throws DomainError on a variable-count mismatch.
bool pair(const DElement& xi, const Polynomial& f);

// Product in the divided power algebra: prod_i C(d_i+e_i, d_i) a^{(d+e)}.
DElement dp_product(const DMonomial& x, const DMonomial& y);
DElement dp_product(const DElement& x, const DElement& y);

// Calls f on each d-monomial of (Sq^k)_*(a^{(e)}): the entries of the
// transpose of Sq^k, coefficient prod_i C(e_i - k_i, k_i).
template <class F>
void for_each_dual_sq_term(unsigned k, const DMonomial& x, F&& f);

// The adjoint of Sq^k: pair(dual_sq(k, xi), f) = pair(xi, Sq^k f).
DElement dual_sq(unsigned k, const DElement& xi);

// Basis of the primitives P_A H_d: the common kernel of (Sq^{2^i})_* for
// 2^i <= d, in canonical echelon form over the degree-d enumeration.
class PrimitiveBasis {
public:
    PrimitiveBasis(std::shared_ptr<const MonomialSpace> space, gf2::EchelonBasis basis);

    std::size_t vars() const { return space_->vars(); }
    unsigned degree() const { return space_->degree(); }
    std::size_t dimension() const { return basis_.rank(); }
    const MonomialSpace& space() const { return *space_; }
    const gf2::EchelonBasis& basis() const { return basis_; }

    std::vector<DElement> elements() const;
    DElement element(std::size_t i) const { return to_element(basis_.rows()[i]); }

    gf2::BitRow to_row(const DElement& xi) const;
    DElement to_element(const gf2::BitRow& row) const;
    bool contains(const DElement& xi) const { return basis_.contains(to_row(xi)); }

    // Coordinates of a primitive in the basis (reads the pivot columns).
    // Throws DomainError when xi is not primitive.
    gf2::BitRow coordinates_of(const DElement& xi) const;

private:
    std::shared_ptr<const MonomialSpace> space_;
    gf2::EchelonBasis basis_;
};

PrimitiveBasis primitive_basis(std::size_t n, unsigned d, const Budget& budget = {});

// True iff (Sq^{2^i})_* xi = 0 for every 2^i <= deg xi.
bool is_primitive(const DElement& xi);

// Dual of the Kameko map: a_i^{(e_i)} -> a_i^{(2e_i + 1)} termwise.
DElement dual_kameko_up(const DElement& xi);

// The three families of 4-variable elements with their validity ranges.
enum class ZetaFamily { A, B, C };

// 2^{t+s+u} + 2^{t+s} + 2^t - 3
unsigned zeta_degree(unsigned t, unsigned s, unsigned u);

// Family A: s = 1, u = 2, t >= 2. Family B: t = 1, s = 2, u >= 1.
// Family C: t, s, u >= 2. Throws DomainError outside these ranges.
DElement zeta_element(ZetaFamily family, unsigned t, unsigned s, unsigned u);

// ---------------------------------------------------------------------------

namespace detail {

template <class F>
void dual_sq_terms(const DMonomial& x, Monomial& out, std::size_t i, unsigned rem, unsigned capacity, F& f)
{
    const unsigned e = x[i];
    if (i + 1 == x.vars()) {
        if (rem <= e && binomial_odd(e - rem, rem)) {
            out[i] = e - rem;
            f(DMonomial(out));
        }
        return;
    }
    const unsigned rest = capacity - e / 2;
    for (unsigned j = 0; j <= rem && 2 * j <= e; ++j) {
        if (rem - j > rest || !binomial_odd(e - j, j))
            continue;
        out[i] = e - j;
        dual_sq_terms(x, out, i + 1, rem - j, rest, f);
    }
}

}  // namespace detail

template <class F>
void for_each_dual_sq_term(unsigned k, const DMonomial& x, F&& f)
{
    unsigned capacity = 0;
    for (std::size_t i = 0; i < x.vars(); ++i)
        capacity += x[i] / 2;
    if (k > capacity || x.vars() == 0)
        return;
    Monomial out = x.dual();
    detail::dual_sq_terms(x, out, 0, k, capacity, f);
}

}  // namespace hitcalc::homology
