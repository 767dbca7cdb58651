#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hitcalc/gl/gl.hpp"
#include "hitcalc/homology/divided.hpp"
#include "hitcalc/transfer/transfer.hpp"
#include "oracles.hpp"

using namespace hitcalc;
using namespace hitcalc::transfer;
using homology::DElement;
using lambda::LambdaElement;
using lambda::LambdaWord;

namespace {

DElement D(const char* text)
{
    return DElement::parse(text);
}

}  // namespace

TEST_CASE("psi on small elements")
{
    CHECK(psi(D("(3)")) == LambdaElement::of(LambdaWord{3}));
    CHECK(psi(D("(0)")) == LambdaElement::of(LambdaWord{0}));
    CHECK(psi(D("(1).(1)")) == LambdaElement::of(LambdaWord{1, 1}));
    CHECK(psi(DElement(2)).is_zero());
}

TEST_CASE("psi of primitives is a cycle")
{
    lambda::LambdaAlgebra& a = lambda::default_algebra();
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned d = 0; d <= (n < 4 ? 16u : 10u); ++d)
            for (const DElement& xi : homology::primitive_basis(n, d).elements()) {
                const LambdaElement image = psi(xi);
                CHECK_MESSAGE(a.is_cycle(image), xi.to_string());
                if (!image.is_zero()) {
                    CHECK(*image.length() == n);
                    CHECK(*image.weight() == d);
                }
                ++checked;
            }
    CHECK(checked > 150);
}

TEST_CASE("psi is linear")
{
    std::mt19937 rng(9);
    for (std::size_t n = 2; n <= 3; ++n)
        for (unsigned d = 1; d <= 9; ++d) {
            const auto mons = enumerate_monomials(n, d);
            for (int trial = 0; trial < 10; ++trial) {
                DElement x(n), y(n);
                for (const Monomial& m : mons) {
                    if (rng() & 1u)
                        x += DElement::of(homology::DMonomial(m));
                    if (rng() & 1u)
                        y += DElement::of(homology::DMonomial(m));
                }
                CHECK(psi(x + y) == psi(x) + psi(y));
            }
        }
}

TEST_CASE("psi factors through the coinvariants")
{
    // g.v + v maps to a boundary for every group element g.
    lambda::LambdaAlgebra& a = lambda::default_algebra();
    for (std::size_t n = 2; n <= 3; ++n) {
        const auto group = oracle::all_invertible(n);
        for (unsigned d = 1; d <= 10; ++d)
            for (const DElement& v : homology::primitive_basis(n, d).elements())
                for (const auto& rows : group) {
                    const gl::GLMatrix g(n, rows);
                    const LambdaElement image = psi(gl::act_homology(g, v) + v);
                    CHECK(a.is_boundary(image));
                }
    }
}

TEST_CASE("labels")
{
    const auto h3 = labels(1, 7);
    REQUIRE(h3.size() == 1);
    CHECK(h3[0].name == "h_3");
    CHECK(h3[0].word == LambdaWord{7});
    bool has_c0 = false;
    for (const Label& l : labels(3, 8))
        has_c0 |= l.name == "c_0" && l.word == LambdaWord{3, 3, 2};
    CHECK(has_c0);
    CHECK(labels(2, 5).empty());
    CHECK(match_label(LambdaElement::of(LambdaWord{7})) == "h_3");
    CHECK(match_label(psi(D("(3).(0)"))) == "h_0h_2");
    CHECK_FALSE(match_label(LambdaElement{}).has_value());
}

TEST_CASE("transfer reports")
{
    const TransferReport r = transfer_report(2, 3);
    CHECK(r.coinvariant_dimension == 1);
    REQUIRE(r.representatives.size() == 1);
    CHECK(r.all_cycles());
    CHECK(r.representatives[0].label == "h_0h_2");
    CHECK(transfer_report(2, 5).representatives.empty());
    const TransferReport h1 = transfer_report(1, 1);
    REQUIRE(h1.representatives.size() == 1);
    CHECK(h1.representatives[0].label == "h_1");
}
