#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hitcalc/errors.hpp"
#include "hitcalc/lambda/lambda.hpp"
#include "oracles.hpp"

using namespace hitcalc;
using namespace hitcalc::lambda;

namespace {

LambdaElement L(const char* text)
{
    return LambdaElement::parse(text);
}

LambdaWord word_of(const oracle::Word& w)
{
    std::vector<int> v(w.begin(), w.end());
    return LambdaWord(std::span<const int>(v));
}

// The classical algebra read backwards, through the oracle.
LambdaElement mirrored(const oracle::Elem& e)
{
    std::vector<LambdaWord> terms;
    for (const oracle::Word& w : e)
        terms.push_back(word_of(oracle::reversed(w)));
    return LambdaElement(std::move(terms));
}

oracle::Word random_word(std::mt19937& rng, std::size_t len, unsigned max_weight)
{
    oracle::Word w(len);
    unsigned left = max_weight;
    for (auto& x : w) {
        x = rng() % (std::min(left, 20u) + 1);
        left -= x;
    }
    return w;
}

}  // namespace

TEST_CASE("words and elements")
{
    const LambdaWord w = LambdaWord::parse("15,3,3,2");
    CHECK(w.length() == 4);
    CHECK(w.weight() == 23);
    CHECK(w.to_string() == "15,3,3,2");
    CHECK(LambdaWord::parse("1") == LambdaWord{1});
    CHECK(LambdaWord::parse("()").length() == 0);
    CHECK(LambdaWord{}.to_string() == "()");
    CHECK(L("1,1+1,1").is_zero());
    CHECK(L("0").to_string() == "0");
    CHECK(L("2,0+1,1").size() == 2);
    CHECK_THROWS_AS(LambdaWord::parse("1,-1"), DomainError);
    CHECK_THROWS_AS(LambdaWord::parse("1,,2"), DomainError);
    CHECK_THROWS_AS(LambdaWord::parse("x"), DomainError);
    CHECK_THROWS_AS(L("1,1+2"), DomainError);
    CHECK_THROWS_AS(LambdaWord({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), DimensionError);
}

TEST_CASE("extended binomials")
{
    CHECK(binomial_mod2(3, 1));
    CHECK_FALSE(binomial_mod2(2, 1));
    CHECK(binomial_mod2(0, 0));
    CHECK_FALSE(binomial_mod2(1, -1));
    CHECK_FALSE(binomial_mod2(1, 2));
    // C(-1, r) = (-1)^r is odd for every r.
    for (long r = 0; r < 10; ++r)
        CHECK(binomial_mod2(-1, r));
    CHECK(binomial_mod2(-2, 2) == binomial_mod2(3, 2));
}

TEST_CASE("relation elements")
{
    CHECK(relation_element(1, 2).is_zero());
    CHECK(relation_element(0, 2) == L("1,1+2,0"));
    for (int s = -1; s <= 12; ++s)
        for (int k = -1; k <= 12; ++k) {
            const LambdaElement r = relation_element(s, k);
            if (!r.is_zero()) {
                CHECK(r.length() == 2u);
                CHECK(*r.weight() == static_cast<unsigned>(s + k));
            }
        }
}

TEST_CASE("normal forms")
{
    LambdaAlgebra a;
    CHECK(a.normal_form(LambdaWord{3, 1}).is_zero());  // h1 h2 = 0
    CHECK(a.normal_form(LambdaWord{0, 2}) == L("0,2"));
    CHECK(a.normal_form(LambdaWord{2, 0}) == L("1,1"));
    CHECK(a.normal_form(LambdaWord{15, 3, 3, 2}) == L("7,7,5,4"));
    CHECK(is_admissible(LambdaWord{0, 2}));
    CHECK_FALSE(is_admissible(LambdaWord{3, 1}));
    CHECK(rewritable(3, 1));
    CHECK_FALSE(rewritable(2, 1));
    for (const auto& [s, k] : rewrite_pair(5, 2))
        CHECK_FALSE(rewritable(s, k));
}

TEST_CASE("relations vanish in the algebra")
{
    // With lambda_{-1} dropped, the k = -1 instances read off d(lambda_s).
    LambdaAlgebra a;
    for (int s = -1; s <= 20; ++s)
        for (int k = -1; k <= 20; ++k) {
            const LambdaElement nf = a.normal_form(relation_element(s, k));
            if (k == -1 && s >= 0)
                CHECK(nf == a.differential(LambdaWord{s}));
            else
                CHECK_MESSAGE(nf.is_zero(), "s=" << s << " k=" << k);
            CHECK(a.differential(relation_element(s, k)).is_zero());
        }
}

TEST_CASE("mirror of the classical algebra")
{
    LambdaAlgebra a;
    std::mt19937 rng(21);
    for (int trial = 0; trial < 1000; ++trial) {
        const oracle::Word w = random_word(rng, 2 + trial % 3, 40);
        const LambdaWord ours = word_of(oracle::reversed(w));
        CHECK(a.normal_form(ours) == mirrored(oracle::classical_normal_form(w)));
        CHECK(a.differential(ours) == mirrored(oracle::classical_differential(w)));
    }
}

TEST_CASE("leftmost and rightmost rewriting agree")
{
    LambdaAlgebra a;
    std::mt19937 rng(34);
    int inadmissible = 0;
    while (inadmissible < 1000) {
        const oracle::Word w = random_word(rng, 2 + rng() % 3, 40);
        const LambdaWord word = word_of(w);
        if (is_admissible(word))
            continue;
        ++inadmissible;
        CHECK(a.normal_form(word, Strategy::Leftmost) == a.normal_form(word, Strategy::Rightmost));
    }
}

TEST_CASE("differential")
{
    LambdaAlgebra a;
    CHECK(a.differential(LambdaWord{1}).is_zero());
    CHECK(a.differential(LambdaWord{2}) == L("0,1"));
    for (int j = 0; j <= 6; ++j)
        CHECK(a.differential(LambdaWord{(1 << j) - 1}).is_zero());
    for (int n = 0; n <= 64; ++n)
        CHECK(a.differential(a.differential(LambdaWord{n})).is_zero());
    std::mt19937 rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        const LambdaWord w = word_of(random_word(rng, 1 + trial % 4, 64));
        const LambdaElement dw = a.differential(w);
        if (!dw.is_zero()) {
            CHECK(*dw.length() == w.length() + 1);
            CHECK(*dw.weight() == w.weight() - 1);
        }
        CHECK(a.differential(dw).is_zero());
    }
}

TEST_CASE("products of h_j are cycles")
{
    LambdaAlgebra a;
    std::vector<int> idx = {0, 1, 3, 7, 15};
    do {
        for (std::size_t len = 1; len <= 3; ++len) {
            std::vector<int> w(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(len));
            CHECK(a.is_cycle(a.normal_form(LambdaWord(std::span<const int>(w)))));
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("bidegree bases")
{
    LambdaAlgebra a;
    CHECK(a.bidegree_basis(1, 9) == std::vector<LambdaWord>{LambdaWord{9}});
    CHECK(a.bidegree_basis(0, 0) == std::vector<LambdaWord>{LambdaWord{}});
    CHECK(a.bidegree_basis(0, 3).empty());
    // Raw words of length 2 and weight 2, normalised and collected.
    std::vector<LambdaWord> seen;
    for (const LambdaWord& raw : {LambdaWord{2, 0}, LambdaWord{1, 1}, LambdaWord{0, 2}}) {
        const LambdaElement nf = a.normal_form(raw);
        seen.insert(seen.end(), nf.terms().begin(), nf.terms().end());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    CHECK(a.bidegree_basis(2, 2) == seen);
    for (std::size_t s = 1; s <= 4; ++s)
        for (unsigned w = 0; w <= 20; ++w)
            for (const LambdaWord& b : a.bidegree_basis(s, w)) {
                CHECK(is_admissible(b));
                CHECK(b.weight() == w);
            }
}

TEST_CASE("homology in low stems")
{
    LambdaAlgebra a;
    for (unsigned w = 0; w <= 63; ++w)
        CHECK(a.homology_dim(1, w) == (((w + 1) & w) == 0 ? 1u : 0u));
    // Ext^{s, s+w} for stems up to 9: h0 towers, h1, h2, h3, c0, P h1.
    auto expected = [](std::size_t s, unsigned w) -> std::size_t {
        switch (w) {
        case 0: return 1;
        case 1: return s == 1;
        case 2: return s == 2;
        case 3: return s <= 3;
        case 6: return s == 2;
        case 7: return s <= 4;
        case 8: return s == 2 || s == 3;
        case 9: return s >= 3 && s <= 5;
        default: return 0;
        }
    };
    for (std::size_t s = 1; s <= 5; ++s)
        for (unsigned w = 0; w <= 9; ++w)
            CHECK_MESSAGE(a.homology_dim(s, w) == expected(s, w), "s=" << s << " w=" << w);
}

TEST_CASE("cycles and boundaries")
{
    LambdaAlgebra a;
    CHECK(a.is_cycle(L("15,3,3,2")));
    CHECK_FALSE(a.is_boundary(a.normal_form(L("15,3,3,2"))));
    const LambdaElement d2 = a.differential(LambdaWord{2});
    CHECK(a.is_boundary(d2));
    CHECK(a.class_equal(L("0,1") + d2, L("0,1") + d2 + d2));
    CHECK(a.is_boundary(LambdaElement{}));
    CHECK_THROWS_AS(a.class_equal(L("1"), L("1,1")), DomainError);
}

TEST_CASE("step budget")
{
    LambdaAlgebra tiny({}, 3);
    CHECK_THROWS_AS(tiny.normal_form(LambdaWord{40, 3, 1, 0}), BudgetError);
}
