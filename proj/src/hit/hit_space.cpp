#include "hitcalc/hit/hit_space.hpp"

#include <string>

#include "hitcalc/errors.hpp"
#include "hitcalc/parallel.hpp"
#include "hitcalc/steenrod/arithmetic.hpp"
#include "hitcalc/steenrod/squares.hpp"

namespace hitcalc::hit {

HitSpace::HitSpace(std::shared_ptr<const MonomialSpace> space, gf2::PeeledEchelon echelon)
    : space_(std::move(space)), echelon_(std::move(echelon))
{
    if (echelon_.width() != space_->size())
        throw DimensionError("hit echelon width does not match the monomial enumeration");
}

gf2::BitRow HitSpace::to_row(const Polynomial& p) const
{
    gf2::BitRow r(space_->size());
    for (const Monomial& m : p.terms())
        r.flip(space_->index_of(m));
    return r;
}

Polynomial HitSpace::to_polynomial(const gf2::BitRow& row) const
{
    std::vector<Monomial> terms;
    for (std::uint32_t i : row.set_bits())
        terms.push_back(space_->at(i));
    return Polynomial(space_->vars(), std::move(terms));
}

gf2::BitRow CohitBasis::coordinates_of(const Polynomial& p) const
{
    gf2::BitRow nf = hit->normal_form(hit->to_row(p));
    gf2::BitRow out(coordinates.size());
    for (std::size_t i = 0; i < coordinates.size(); ++i)
        if (nf.test(coordinates[i]))
            out.set(i);
    return out;
}

std::vector<gf2::SparseRow> hit_generator_rows(const MonomialSpace& target, unsigned threads)
{
    const std::size_t n = target.vars();
    const unsigned d = target.degree();
    std::vector<gf2::SparseRow> rows;
    for (unsigned k = 1; 2 * k <= d; k *= 2) {
        const std::vector<Monomial> sources = enumerate_monomials(n, d - k);
        std::vector<std::vector<gf2::SparseRow>> parts(std::max(1u, threads));
        parallel_chunks(sources.size(), threads, [&](std::size_t chunk, std::size_t b, std::size_t e) {
            auto& out = parts[chunk];
            gf2::SparseRow row;
            for (std::size_t i = b; i < e; ++i) {
                row.clear();
                for_each_sq_term(k, sources[i], [&](const Monomial& t) {
                    row.push_back(static_cast<std::uint32_t>(target.index_of(t)));
                });
                if (!row.empty()) {
                    std::sort(row.begin(), row.end());
                    out.push_back(row);
                }
            }
        });
        for (auto& part : parts)
            for (auto& r : part)
                rows.push_back(std::move(r));
    }
    return rows;
}

HitSpace hit_basis(std::size_t n, unsigned d, const Budget& budget)
{
    if (n == 0 || n > kMaxVars)
        throw DomainError("variable count must be in 1.." + std::to_string(kMaxVars));
    budget.require_rows(count_monomials(n, d), "monomial enumeration");
    auto space = std::make_shared<const MonomialSpace>(n, d);
    std::vector<gf2::SparseRow> rows = hit_generator_rows(*space, budget.threads);
    gf2::PeeledEchelon echelon = gf2::echelonize_sparse(rows, space->size(), budget);
    return HitSpace(std::move(space), std::move(echelon));
}

std::size_t cohit_dim(std::size_t n, unsigned d, const Budget& budget)
{
    HitSpace h = hit_basis(n, d, budget);
    return h.space().size() - h.rank();
}

CohitBasis cohit_basis(std::shared_ptr<const HitSpace> hit)
{
    CohitBasis out;
    out.n = hit->vars();
    out.d = hit->degree();
    out.coordinates = hit->echelon().non_pivot_columns();
    for (std::uint32_t c : out.coordinates)
        out.representatives.push_back(hit->space().at(c));
    out.hit = std::move(hit);
    return out;
}

CohitBasis cohit_basis(std::size_t n, unsigned d, const Budget& budget)
{
    return cohit_basis(std::make_shared<const HitSpace>(hit_basis(n, d, budget)));
}

bool peterson_wood_zero(std::size_t n, unsigned d)
{
    return alpha(n + d) > n;
}

std::optional<Monomial> kameko_down(const Monomial& m)
{
    const std::size_t n = m.vars();
    const unsigned deg = m.degree();
    if (deg < n || (deg - n) % 2 != 0)
        throw DomainError("Kameko down map needs degree 2d+n; got degree " + std::to_string(deg) + " with n = " +
                          std::to_string(n));
    Monomial out = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i] % 2 == 0)
            return std::nullopt;
        out[i] = (m[i] - 1) / 2;
    }
    return out;
}

Polynomial kameko_down(const Polynomial& p)
{
    std::vector<Monomial> terms;
    for (const Monomial& m : p.terms())
        if (auto t = kameko_down(m))
            terms.push_back(*t);
    return Polynomial(p.vars(), std::move(terms));
}

bool kameko_iso_applicable(std::size_t n, unsigned D)
{
    return D >= n && (D - n) % 2 == 0 && mu(D) == n;
}

std::vector<unsigned> reduce_degree_chain(std::size_t n, unsigned d)
{
    std::vector<unsigned> chain{d};
    while (kameko_iso_applicable(n, chain.back()))
        chain.push_back(static_cast<unsigned>((chain.back() - n) / 2));
    return chain;
}

}  // namespace hitcalc::hit
