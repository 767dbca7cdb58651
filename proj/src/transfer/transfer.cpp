#include "hitcalc/transfer/transfer.hpp"

#include <algorithm>
#include <map>

#include "hitcalc/errors.hpp"

namespace hitcalc::transfer {

using homology::DElement;
using homology::DMonomial;
using lambda::LambdaElement;
using lambda::LambdaWord;

namespace {

// Raw images, not yet normalised.
std::vector<LambdaWord> psi_raw(const DElement& xi, Orientation orientation)
{
    const std::size_t n = xi.vars();
    std::vector<LambdaWord> out;
    if (n == 1) {
        for (const DMonomial& m : xi.terms())
            out.push_back(LambdaWord{static_cast<int>(m[0])});
        return out;
    }
    const std::size_t peeled = orientation == Orientation::PeelFirst ? 0 : n - 1;
    const std::size_t offset = orientation == Orientation::PeelFirst ? 1 : 0;

    // Group terms by the exponent of the peeled variable.
    std::map<unsigned, std::vector<DMonomial>> groups;
    for (const DMonomial& m : xi.terms()) {
        std::vector<unsigned> rest;
        for (std::size_t i = 0; i < n - 1; ++i)
            rest.push_back(m[i + offset]);
        groups[m[peeled]].emplace_back(Monomial(std::span<const unsigned>(rest)));
    }
    for (const auto& [i, terms] : groups) {
        DElement z(n - 1, terms);
        const unsigned deg = static_cast<unsigned>(std::max(0L, z.homogeneous_degree()));
        for (unsigned t = 0; t <= deg; ++t) {
            DElement zt = t == 0 ? z : homology::dual_sq(t, z);
            if (zt.is_zero())
                continue;
            const LambdaWord head{static_cast<int>(i + t)};
            for (const LambdaWord& w : psi_raw(zt, orientation))
                out.push_back(orientation == Orientation::PeelFirst ? head * w : w * head);
        }
    }
    return out;
}

}  // namespace

LambdaElement psi(const DElement& xi, Orientation orientation, lambda::LambdaAlgebra& algebra)
{
    if (xi.is_zero())
        return {};
    if (xi.homogeneous_degree() < 0)
        throw DomainError("psi needs a homogeneous element: " + xi.to_string());
    return algebra.normal_form(LambdaElement(psi_raw(xi, orientation)));
}

std::vector<Label> labels(std::size_t length, unsigned weight)
{
    std::vector<Label> out;
    std::vector<int> idx;
    std::string name;
    auto h_words = [&](auto& self, std::size_t left, unsigned rem, unsigned min_j) -> void {
        if (left == 0) {
            if (rem == 0)
                out.push_back({name, LambdaWord(std::span<const int>(idx))});
            return;
        }
        for (unsigned j = min_j; (1u << j) - 1 <= rem && j < 16; ++j) {
            const std::size_t mark = name.size();
            idx.push_back(static_cast<int>((1u << j) - 1));
            name += "h_" + std::to_string(j);
            self(self, left - 1, rem - ((1u << j) - 1), j);
            idx.pop_back();
            name.resize(mark);
        }
    };
    h_words(h_words, length, weight, 0);
    if (length >= 3) {
        for (unsigned t = 0; t < 12; ++t) {
            const unsigned a = (1u << (t + 2)) - 1, b = (1u << (t + 1)) + (1u << t) - 1;
            if (2 * a + b > weight)
                break;
            const std::size_t before = out.size();
            h_words(h_words, length - 3, weight - 2 * a - b, 0);
            for (std::size_t k = before; k < out.size(); ++k) {
                out[k].name += "c_" + std::to_string(t);
                out[k].word = out[k].word * LambdaWord{static_cast<int>(a), static_cast<int>(a), static_cast<int>(b)};
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Label& x, const Label& y) { return x.name < y.name; });
    return out;
}

std::optional<std::string> match_label(const LambdaElement& e, lambda::LambdaAlgebra& algebra)
{
    if (e.is_zero() || algebra.is_boundary(e))
        return std::nullopt;
    for (const Label& l : labels(*e.length(), *e.weight())) {
        const LambdaElement w = LambdaElement::of(l.word);
        if (!algebra.is_boundary(w) && algebra.class_equal(e, w))
            return l.name;
    }
    return std::nullopt;
}

bool TransferReport::all_cycles() const
{
    return std::all_of(representatives.begin(), representatives.end(),
                       [](const Representative& r) { return r.cycle; });
}

TransferReport transfer_report(const gl::CoinvariantReport& coinvariants, lambda::LambdaAlgebra& algebra)
{
    TransferReport report;
    report.n = coinvariants.vars();
    report.d = coinvariants.degree();
    report.coinvariant_dimension = coinvariants.dimension();
    for (const DElement& xi : coinvariants.class_representatives()) {
        Representative r;
        r.element = xi;
        r.image = psi(xi, Orientation::PeelFirst, algebra);
        r.cycle = algebra.is_cycle(r.image);
        if (r.cycle)
            r.label = match_label(r.image, algebra);
        report.representatives.push_back(std::move(r));
    }
    return report;
}

TransferReport transfer_report(std::size_t n, unsigned d, const Budget& budget)
{
    lambda::LambdaAlgebra algebra(budget);
    return transfer_report(gl::coinvariant_classes(n, d, budget), algebra);
}

}  // namespace hitcalc::transfer
