// One PASS/FAIL line per acceptance criterion. Expected values are written
// out here rather than read back from the library's own tables.
//
//   acceptance            run everything
//   acceptance 3 5        run only criteria 3 and 5

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hitcalc/gl/gl.hpp"
#include "hitcalc/hit/hit_space.hpp"
#include "hitcalc/homology/divided.hpp"
#include "hitcalc/lambda/lambda.hpp"
#include "hitcalc/steenrod/arithmetic.hpp"
#include "hitcalc/transfer/transfer.hpp"
#include "oracles.hpp"

using namespace hitcalc;
using homology::DElement;
using homology::ZetaFamily;
using lambda::LambdaElement;
using lambda::LambdaWord;

namespace {

// Collects the first few mismatches of a criterion.
struct Check {
    std::size_t failures = 0;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what)
    {
        if (ok)
            return;
        if (failures < 5)
            detail << (failures ? "; " : "") << what;
        ++failures;
    }
};

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Check&)> body;
};

std::string str(std::size_t v)
{
    return std::to_string(v);
}

struct Rank4Case {
    unsigned t, s, u, d;
    std::size_t dim;
};

// The smallest instances of the rank-4 coinvariant table.
const std::vector<Rank4Case> kRank4 = {
    {1, 1, 1, 11, 0}, {2, 1, 1, 25, 0}, {1, 1, 2, 19, 0}, {1, 3, 1, 47, 0},
    {1, 2, 1, 23, 1}, {1, 2, 2, 39, 1}, {2, 1, 2, 41, 1},
};

ZetaFamily family_for(unsigned t, unsigned s, unsigned u)
{
    if (t == 1 && s == 2)
        return ZetaFamily::B;
    if (s == 1 && u == 2)
        return ZetaFamily::A;
    (void)u;
    return ZetaFamily::C;
}

// pair(xi, Sq^k m) = 0 for every monomial m of degree d - k, with the squares
// expanded by the oracle.
bool annihilated_by_oracle(const DElement& xi, unsigned k)
{
    std::set<oracle::Exps> support;
    for (const auto& t : xi.terms())
        support.insert(oracle::Exps(t.dual().exponents().begin(), t.dual().exponents().end()));
    const unsigned d = xi.terms().front().degree();
    for (const oracle::Exps& m : oracle::monomials(xi.vars(), d - k)) {
        bool parity = false;
        for (const oracle::Exps& t : oracle::sq(k, m))
            parity ^= support.count(t) != 0;
        if (parity)
            return false;
    }
    return true;
}

oracle::Word random_word(std::mt19937& rng, std::size_t len, unsigned max_weight)
{
    oracle::Word w(len);
    unsigned left = max_weight;
    for (auto& x : w) {
        x = rng() % (std::min(left, 24u) + 1);
        left -= x;
    }
    return w;
}

LambdaWord word_of(const oracle::Word& w)
{
    std::vector<int> v(w.begin(), w.end());
    return LambdaWord(std::span<const int>(v));
}

const std::vector<Criterion> kCriteria = {
    {1, "cohits from 2-power squares match the all-squares oracle, n <= 3, d <= 20", 60,
     [](Check& c) {
         for (std::size_t n = 1; n <= 3; ++n)
             for (unsigned d = 0; d <= 20; ++d) {
                 const std::size_t got = hit::cohit_dim(n, d), want = oracle::cohit_dim_all_squares(n, d);
                 c.expect(got == want, "n=" + str(n) + " d=" + str(d) + ": " + str(got) + " vs " + str(want));
             }
     }},
    {2, "cohits vanish when alpha(n + d) > n, n <= 4, d <= 30", 300,
     [](Check& c) {
         std::size_t cases = 0;
         for (std::size_t n = 1; n <= 4; ++n)
             for (unsigned d = 0; d <= 30; ++d)
                 if (alpha(n + d) > n) {
                     ++cases;
                     const std::size_t got = hit::cohit_dim(n, d);
                     c.expect(got == 0, "n=" + str(n) + " d=" + str(d) + ": " + str(got));
                 }
         c.expect(cases > 0, "no cases");
     }},
    {3, "rank-4 coinvariant dimensions and generators", 600,
     [](Check& c) {
         for (const Rank4Case& r : kRank4) {
             const std::string at = "(" + str(r.t) + "," + str(r.s) + "," + str(r.u) + ") d=" + str(r.d);
             c.expect(homology::zeta_degree(r.t, r.s, r.u) == r.d, at + ": degree");
             const gl::CoinvariantReport co = gl::coinvariant_classes(4, r.d);
             c.expect(co.dimension() == r.dim, at + ": dimension " + str(co.dimension()));
             if (r.dim == 1) {
                 const DElement zeta = homology::zeta_element(family_for(r.t, r.s, r.u), r.t, r.s, r.u);
                 c.expect(co.is_nonzero_class(zeta), at + ": zeta class is zero");
             }
         }
     }},
    {4, "zeta elements are primitive", 60,
     [](Check& c) {
         for (const Rank4Case& r : kRank4) {
             if (r.dim == 0)
                 continue;
             const DElement zeta = homology::zeta_element(family_for(r.t, r.s, r.u), r.t, r.s, r.u);
             for (unsigned k = 1; k <= r.d; k *= 2) {
                 c.expect(homology::dual_sq(k, zeta).is_zero(), "d=" + str(r.d) + " Sq^" + str(k));
                 c.expect(annihilated_by_oracle(zeta, k), "d=" + str(r.d) + " Sq^" + str(k) + " (oracle)");
             }
         }
     }},
    {5, "transfer images of the zeta generators", 300,
     [](Check& c) {
         struct Image {
             ZetaFamily family;
             unsigned t, s, u;
             LambdaWord word;
             const char* label;
         };
         const std::vector<Image> images = {
             {ZetaFamily::B, 1, 2, 1, LambdaWord{15, 3, 3, 2}, "h_4c_0"},
             {ZetaFamily::A, 2, 1, 2, LambdaWord{0, 15, 15, 11}, "h_0c_2"},
             {ZetaFamily::C, 2, 2, 2, LambdaWord{0, 3, 15, 63}, "h_0h_2h_4h_6"},
         };
         lambda::LambdaAlgebra algebra;
         for (const Image& im : images) {
             const std::string at = "zeta(" + str(im.t) + "," + str(im.s) + "," + str(im.u) + ")";
             const LambdaElement image = transfer::psi(homology::zeta_element(im.family, im.t, im.s, im.u),
                                                       transfer::Orientation::PeelFirst, algebra);
             c.expect(algebra.differential(image).is_zero(), at + ": not a cycle");
             const LambdaElement shown = algebra.normal_form(LambdaElement::of(im.word));
             c.expect(algebra.is_cycle(shown), at + ": displayed word is not a cycle");
             c.expect(algebra.class_equal(image, shown), at + ": class differs from " + im.word.to_string());
             c.expect(!algebra.is_boundary(shown), at + ": class is zero");
             const auto label = transfer::match_label(image, algebra);
             c.expect(label == im.label, at + ": label " + label.value_or("none"));
         }
     }},
    {6, "lambda homology anchors", 900,
     [](Check& c) {
         lambda::LambdaAlgebra algebra;
         for (unsigned w = 0; w <= 63; ++w) {
             const bool spike = ((w + 1) & w) == 0;
             c.expect(algebra.homology_dim(1, w) == (spike ? 1u : 0u), "H(1," + str(w) + ")");
         }
         c.expect(algebra.homology_dim(4, 41) == 1, "H(4,41)");
         c.expect(algebra.homology_dim(5, 50) == 0, "H(5,50)");
         const LambdaElement product = LambdaElement::of(LambdaWord{0, 1, 3, 15, 31});
         c.expect(algebra.is_cycle(algebra.normal_form(product)), "h0h1h3h4h5 word is not a cycle");
         c.expect(algebra.is_boundary(product), "h0h1h3h4h5 word is not a boundary");
     }},
    {7, "invariants and coinvariants have equal dimension, n <= 4, d <= 30", 600,
     [](Check& c) {
         for (std::size_t n = 1; n <= 4; ++n)
             for (unsigned d = 0; d <= 30; ++d) {
                 const std::size_t inv = gl::invariant_basis(n, d).dimension();
                 const std::size_t co = gl::coinvariant_classes(n, d).dimension();
                 c.expect(inv == co, "n=" + str(n) + " d=" + str(d) + ": " + str(inv) + " vs " + str(co));
             }
     }},
    {8, "Kameko degree chains", 60,
     [](Check& c) {
         c.expect(hit::reduce_degree_chain(5, 215) == std::vector<unsigned>{215, 105, 50}, "chain(5,215)");
         c.expect(hit::cohit_dim(3, 11) == hit::cohit_dim(3, 4), "Q(3,11) vs Q(3,4)");
         c.expect(oracle::cohit_dim_all_squares(3, 11) == oracle::cohit_dim_all_squares(3, 4), "oracle Q(3,11) vs Q(3,4)");
     }},
    {9, "lambda consistency: d^2 = 0, relations, confluence", 300,
     [](Check& c) {
         lambda::LambdaAlgebra algebra;
         for (int n = 0; n <= 64; ++n)
             c.expect(algebra.differential(algebra.differential(LambdaWord{n})).is_zero(), "dd(" + str(n) + ")");
         std::mt19937 rng(2024);
         for (int trial = 0; trial < 500; ++trial) {
             const LambdaWord w = word_of(random_word(rng, 1 + trial % 4, 64));
             c.expect(algebra.differential(algebra.differential(w)).is_zero(), "dd(" + w.to_string() + ")");
         }
         for (int s = -1; s <= 20; ++s)
             for (int k = -1; k <= 20; ++k)
                 c.expect(algebra.differential(lambda::relation_element(s, k)).is_zero(),
                          "d(relation " + std::to_string(s) + "," + std::to_string(k) + ")");
         int inadmissible = 0;
         while (inadmissible < 1000) {
             const LambdaWord w = word_of(random_word(rng, 2 + rng() % 3, 40));
             if (lambda::is_admissible(w))
                 continue;
             ++inadmissible;
             c.expect(algebra.normal_form(w, lambda::Strategy::Leftmost) ==
                          algebra.normal_form(w, lambda::Strategy::Rightmost),
                      "confluence " + w.to_string());
         }
     }},
    {10, "rank-5 coinvariants vanish in degree 50", 3600,
     [](Check& c) {
         const gl::CoinvariantReport co = gl::coinvariant_classes(5, 50);
         c.expect(co.dimension() == 0, "dimension " + str(co.dimension()));
     }},
};

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const Criterion& cr : kCriteria) {
        if (!only.empty() && !only.count(cr.id))
            continue;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        check.expect(secs <= cr.limit_s, "over the time limit");
        const bool pass = check.failures == 0;
        failed += !pass;
        std::printf("%s [%d] %s (%.1f s, limit %.0f s)", pass ? "PASS" : "FAIL", cr.id, cr.name, secs, cr.limit_s);
        if (!pass)
            std::printf(": %zu failure(s): %s", check.failures, check.detail.str().c_str());
        std::printf("\n");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
