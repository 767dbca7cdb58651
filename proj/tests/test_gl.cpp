#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitcalc/errors.hpp"
#include "hitcalc/gl/gl.hpp"
#include "hitcalc/hit/hit_space.hpp"
#include "hitcalc/steenrod/squares.hpp"
#include "oracles.hpp"

using namespace hitcalc;
using namespace hitcalc::gl;
using homology::DElement;

namespace {

Polynomial P(const char* text)
{
    return Polynomial::parse(text);
}

GLMatrix random_matrix(std::size_t n, std::mt19937& rng)
{
    const auto all = group_closure(n, generators(n));
    return all[rng() % all.size()];
}

}  // namespace

TEST_CASE("matrices")
{
    const GLMatrix g = GLMatrix::parse("10;11");
    CHECK(g.size() == 2);
    CHECK(g.to_string() == "10;11");
    CHECK(g * g.inverse() == GLMatrix::identity(2));
    CHECK(g * g == GLMatrix::identity(2));
    CHECK_THROWS_AS(GLMatrix::parse("11;11"), DomainError);
    CHECK_THROWS_AS(GLMatrix::parse("1;11"), DomainError);
    CHECK_THROWS_AS(GLMatrix::parse("12;01"), DomainError);
    CHECK(generators(1).empty());
}

TEST_CASE("generators generate the whole group")
{
    CHECK(group_closure(2, generators(2)).size() == 6);
    CHECK(group_closure(3, generators(3)).size() == 168);
    CHECK(group_closure(4, generators(4)).size() == 20160);
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto closure = group_closure(n, generators(n));
        const auto all = oracle::all_invertible(n);
        CHECK(closure.size() == all.size());
        for (const auto& rows : all)
            CHECK(std::binary_search(closure.begin(), closure.end(), GLMatrix(n, rows)));
    }
}

TEST_CASE("action on polynomials")
{
    // u1 <-> u2
    const GLMatrix swap = GLMatrix::parse("01;10");
    CHECK(act_poly(swap, P("2.1")) == P("1.2"));
    // u2 -> u1 + u2 (row 0 carries a one in column 1)
    const GLMatrix t = GLMatrix::parse("11;01");
    CHECK(act_poly(t, P("0.1")) == P("1.0+0.1"));
    CHECK(act_poly(t, P("1.0")) == P("1.0"));
    CHECK(act_poly(t, P("0.2")) == P("2.0+0.2"));
    CHECK(act_poly(t, P("1.1")) == P("2.0+1.1"));
}

TEST_CASE("the action is a representation commuting with squares")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const GLMatrix g = random_matrix(n, rng), h = random_matrix(n, rng);
        for (const Monomial& m : enumerate_monomials(n, 1 + trial % 5)) {
            const Polynomial f = Polynomial::of(m);
            CHECK(act_poly(g * h, f) == act_poly(g, act_poly(h, f)));
            for (unsigned k = 1; k <= m.degree(); ++k)
                CHECK(act_poly(g, sq(k, f)) == sq(k, act_poly(g, f)));
        }
    }
}

TEST_CASE("action on homology is contragredient")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const unsigned d = 1 + trial % 6;
        const GLMatrix g = random_matrix(n, rng);
        const auto mons = enumerate_monomials(n, d);
        for (const Monomial& a : mons) {
            const DElement xi = DElement::of(homology::DMonomial(a));
            const DElement gx = act_homology(g, xi);
            for (const Monomial& b : mons) {
                const Polynomial f = Polynomial::of(b);
                CHECK(pair(gx, f) == pair(xi, act_poly(g.inverse(), f)));
            }
        }
    }
}

TEST_CASE("invariants of small degrees")
{
    CHECK(invariant_basis(1, 3).dimension() == 1);
    CHECK(invariant_basis(2, 2).dimension() == 1);
    // u1^3 + u2^3 + u1^2 u2 is fixed by both generators modulo hit elements.
    const InvariantBasis inv = invariant_basis(2, 3);
    CHECK(inv.cohit_dimension == 3);
    CHECK(inv.dimension() == 1);
    CHECK(inv.classes.at(0) == P("3.0+2.1+0.3"));
    CHECK(invariant_basis(2, 5).dimension() == 0);
}

TEST_CASE("invariants are fixed by the whole group")
{
    for (std::size_t n = 2; n <= 3; ++n)
        for (unsigned d = 1; d <= 12; ++d) {
            const hit::CohitBasis cohits = hit::cohit_basis(n, d);
            const InvariantBasis inv = invariant_basis(cohits);
            for (const auto& rows : oracle::all_invertible(n)) {
                const GLMatrix g(n, rows);
                for (const Polynomial& c : inv.classes)
                    CHECK(cohits.hit->is_hit(act_poly(g, c) + c));
            }
        }
}

TEST_CASE("invariants and coinvariants are dual")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned d = 0; d <= (n < 4 ? 24u : 16u); ++d) {
            const std::size_t inv = invariant_basis(n, d).dimension();
            const CoinvariantReport co = coinvariant_classes(n, d);
            CHECK_MESSAGE(inv == co.dimension(), "n=" << n << " d=" << d);
            CHECK(co.class_representatives().size() == co.dimension());
            for (const DElement& r : co.class_representatives())
                CHECK(co.is_nonzero_class(r));
        }
}

TEST_CASE("coinvariant classes")
{
    const CoinvariantReport co = coinvariant_classes(2, 3);
    CHECK(co.primitive_dimension() == 3);
    CHECK(co.dimension() == 1);
    // g.v + v is zero in the coinvariants for every group element.
    for (const auto& rows : oracle::all_invertible(2)) {
        const GLMatrix g(2, rows);
        for (const DElement& v : co.primitives().elements())
            CHECK_FALSE(co.is_nonzero_class(act_homology(g, v) + v));
    }
    CHECK_THROWS_AS(co.class_of(DElement::parse("(2).(1)")), DomainError);
}
