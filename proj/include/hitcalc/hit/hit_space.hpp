#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hitcalc/budget.hpp"
#include "hitcalc/gf2/echelon.hpp"
#include "hitcalc/steenrod/enumeration.hpp"
#include "hitcalc/steenrod/monomial.hpp"

namespace hitcalc::hit {

// The hit subspace of P^d_n = Z/2[u_1..u_n] in degree d, spanned by the
// images Sq^{2^i}(P^{d-2^i}).
class HitSpace {
public:
    HitSpace(std::shared_ptr<const MonomialSpace> space, gf2::PeeledEchelon echelon);

    std::size_t vars() const { return space_->vars(); }
    unsigned degree() const { return space_->degree(); }
    const MonomialSpace& space() const { return *space_; }
    std::shared_ptr<const MonomialSpace> space_ptr() const { return space_; }
    std::size_t rank() const { return echelon_.rank(); }
    const gf2::PeeledEchelon& echelon() const { return echelon_; }

    // Canonical reduced basis over the monomial enumeration.
    gf2::EchelonBasis basis() const { return echelon_.materialize(); }

    gf2::BitRow to_row(const Polynomial& p) const;
    Polynomial to_polynomial(const gf2::BitRow& row) const;

    // Representative of the cohit class of p supported on non-pivot monomials.
    gf2::BitRow normal_form(const gf2::BitRow& row) const { return echelon_.reduce(row); }
    Polynomial normal_form(const Polynomial& p) const { return to_polynomial(normal_form(to_row(p))); }
    bool is_hit(const Polynomial& p) const { return normal_form(to_row(p)).is_zero(); }

private:
    std::shared_ptr<const MonomialSpace> space_;
    gf2::PeeledEchelon echelon_;
};

// A monomial basis of the cohits Q^d_n = P^d_n / hit: the non-pivot
// monomials of the hit basis, in enumeration order.
struct CohitBasis {
    std::size_t n = 0;
    unsigned d = 0;
    std::vector<Monomial> representatives;
    std::vector<std::uint32_t> coordinates;
    std::shared_ptr<const HitSpace> hit;

    std::size_t dimension() const { return representatives.size(); }
    // Coordinates of the class of p in the representative basis.
    gf2::BitRow coordinates_of(const Polynomial& p) const;
};

// Sparse rows Sq^{2^i}(m) for every source monomial m of degree d - 2^i,
// over the degree-d enumeration. Chunked over `threads`; the row order does
// not depend on the thread count.
std::vector<gf2::SparseRow> hit_generator_rows(const MonomialSpace& target, unsigned threads = 1);

HitSpace hit_basis(std::size_t n, unsigned d, const Budget& budget = {});
std::size_t cohit_dim(std::size_t n, unsigned d, const Budget& budget = {});
CohitBasis cohit_basis(std::size_t n, unsigned d, const Budget& budget = {});
CohitBasis cohit_basis(std::shared_ptr<const HitSpace> hit);

// alpha(n + d) > n. By Wood's theorem the cohits then vanish.
bool peterson_wood_zero(std::size_t n, unsigned d);

// Kameko's down map: all-odd exponents (2a_i + 1) go to (a_i), everything
// else to zero. Throws DomainError when deg(m) - n is negative or odd.
std::optional<Monomial> kameko_down(const Monomial& m);
Polynomial kameko_down(const Polynomial& p);

// D = n (mod 2) and mu(D) = n: the down map Q^D -> Q^{(D-n)/2} is then an
// isomorphism.
bool kameko_iso_applicable(std::size_t n, unsigned D);

// d, (d-n)/2, ... while the isomorphism criterion holds.
std::vector<unsigned> reduce_degree_chain(std::size_t n, unsigned d);

}  // namespace hitcalc::hit
