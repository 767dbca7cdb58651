#include "hitcalc/gl/gl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "hitcalc/errors.hpp"

namespace hitcalc::gl {

using homology::DElement;
using homology::DMonomial;

namespace {

std::uint32_t full_mask(std::size_t n)
{
    return n >= 32 ? ~0u : (1u << n) - 1u;
}

// Rank over F2 of the rows, each a bitmask.
std::size_t mask_rank(std::vector<std::uint32_t> rows)
{
    std::size_t rank = 0;
    for (unsigned bit = 0; bit < 32; ++bit) {
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                               [&](std::uint32_t r) { return (r >> bit) & 1u; });
        if (it == rows.end())
            continue;
        std::swap(*it, rows[rank]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> bit) & 1u))
                rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace

GLMatrix::GLMatrix(std::size_t n, std::vector<std::uint32_t> rows) : n_(n), rows_(std::move(rows))
{
    if (n == 0 || n > kMaxVars)
        throw DomainError("matrix size must be in 1.." + std::to_string(kMaxVars));
    if (rows_.size() != n)
        throw DimensionError("matrix needs " + std::to_string(n) + " rows");
    for (std::uint32_t r : rows_)
        if (r & ~full_mask(n))
            throw DimensionError("matrix row wider than " + std::to_string(n));
    if (mask_rank(rows_) != n)
        throw DomainError("matrix is not invertible over F2: " + to_string());
}

GLMatrix GLMatrix::identity(std::size_t n)
{
    std::vector<std::uint32_t> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        rows[i] = 1u << i;
    return GLMatrix(n, std::move(rows));
}

GLMatrix GLMatrix::parse(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t semi = text.find(';', pos);
        parts.push_back(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
        if (semi == std::string_view::npos)
            break;
        pos = semi + 1;
    }
    const std::size_t n = parts.size();
    std::vector<std::uint32_t> rows;
    for (std::string_view p : parts) {
        if (p.size() != n)
            throw DomainError("matrix '" + std::string(text) + "' is not square");
        std::uint32_t r = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (p[j] == '1')
                r |= 1u << j;
            else if (p[j] != '0')
                throw DomainError("matrix '" + std::string(text) + "' has a non-bit entry");
        }
        rows.push_back(r);
    }
    return GLMatrix(n, std::move(rows));
}

GLMatrix GLMatrix::operator*(const GLMatrix& other) const
{
    if (n_ != other.n_)
        throw DimensionError("matrix product of different sizes");
    std::vector<std::uint32_t> rows(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k)
            if (at(i, k))
                rows[i] ^= other.rows_[k];
    return GLMatrix(n_, std::move(rows));
}

GLMatrix GLMatrix::inverse() const
{
    // Gauss-Jordan on [A | I].
    std::vector<std::uint32_t> a = rows_;
    std::vector<std::uint32_t> inv(n_);
    for (std::size_t i = 0; i < n_; ++i)
        inv[i] = 1u << i;
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (!((a[piv] >> col) & 1u))
            ++piv;
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        for (std::size_t r = 0; r < n_; ++r) {
            if (r != col && ((a[r] >> col) & 1u)) {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    return GLMatrix(n_, std::move(inv));
}

std::string GLMatrix::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i)
            s += ';';
        for (std::size_t j = 0; j < n_; ++j)
            s += ((rows_[i] >> j) & 1u) ? '1' : '0';
    }
    return s;
}

std::vector<GLMatrix> generators(std::size_t n)
{
    std::vector<GLMatrix> gens;
    if (n < 2)
        return gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<std::uint32_t> rows(n);
        for (std::size_t r = 0; r < n; ++r)
            rows[r] = 1u << r;
        std::swap(rows[i], rows[i + 1]);
        gens.emplace_back(n, std::move(rows));
    }
    // u_1 -> u_1 + u_2: g_11 = g_21 = 1.
    std::vector<std::uint32_t> rows(n);
    for (std::size_t r = 0; r < n; ++r)
        rows[r] = 1u << r;
    rows[1] |= 1u;
    gens.emplace_back(n, std::move(rows));
    return gens;
}

std::vector<GLMatrix> group_closure(std::size_t n, const std::vector<GLMatrix>& gens)
{
    std::set<GLMatrix> seen{GLMatrix::identity(n)};
    std::deque<GLMatrix> frontier{GLMatrix::identity(n)};
    while (!frontier.empty()) {
        GLMatrix g = frontier.front();
        frontier.pop_front();
        for (const GLMatrix& s : gens) {
            GLMatrix h = s * g;
            if (seen.insert(h).second)
                frontier.push_back(h);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {

// (sum_{i in S} u_i)^e: each binary digit 2^b of e goes to one u_i.
std::vector<Monomial> linear_form_power(std::size_t n, std::uint32_t support, unsigned e)
{
    std::vector<Monomial> out{Monomial::one(n)};
    for (unsigned b = 0; (e >> b) != 0; ++b) {
        if (!((e >> b) & 1u))
            continue;
        std::vector<Monomial> next;
        for (const Monomial& m : out) {
            for (std::size_t i = 0; i < n; ++i) {
                if ((support >> i) & 1u) {
                    Monomial t = m;
                    t[i] += 1u << b;
                    next.push_back(t);
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

// Divided power gamma_e(sum_{j in S} a_j) = sum over compositions of e.
std::vector<DMonomial> divided_power_of_sum(std::size_t n, std::uint32_t support, unsigned e)
{
    std::vector<std::size_t> vars;
    for (std::size_t j = 0; j < n; ++j)
        if ((support >> j) & 1u)
            vars.push_back(j);
    std::vector<DMonomial> out;
    if (vars.empty())
        return out;
    Monomial cur = Monomial::one(n);
    auto rec = [&](auto& self, std::size_t idx, unsigned rem) -> void {
        if (idx + 1 == vars.size()) {
            cur[vars[idx]] = rem;
            out.emplace_back(cur);
            cur[vars[idx]] = 0;
            return;
        }
        for (unsigned c = 0; c <= rem; ++c) {
            cur[vars[idx]] = c;
            self(self, idx + 1, rem - c);
        }
        cur[vars[idx]] = 0;
    };
    rec(rec, 0, e);
    return out;
}

}  // namespace

Polynomial act_poly(const GLMatrix& g, const Polynomial& p)
{
    if (!p.is_zero() && p.vars() != g.size())
        throw DimensionError("matrix of size " + std::to_string(g.size()) + " acting on " +
                             std::to_string(p.vars()) + " variables");
    const std::size_t n = g.size();
    // Column j of g is the image of u_j.
    std::vector<std::uint32_t> column(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.at(i, j))
                column[j] |= 1u << i;
    Polynomial out(n);
    for (const Monomial& m : p.terms()) {
        Polynomial term = Polynomial::of(Monomial::one(n));
        for (std::size_t j = 0; j < n && !term.is_zero(); ++j) {
            if (m[j] == 0)
                continue;
            term = term * Polynomial(n, linear_form_power(n, column[j], m[j]));
        }
        out += term;
    }
    return out;
}

DElement act_homology(const GLMatrix& g, const DElement& xi)
{
    if (!xi.is_zero() && xi.vars() != g.size())
        throw DimensionError("matrix of size " + std::to_string(g.size()) + " acting on " +
                             std::to_string(xi.vars()) + " variables");
    const std::size_t n = g.size();
    const GLMatrix h = g.inverse();
    DElement out(n);
    for (const DMonomial& x : xi.terms()) {
        DElement term = DElement::of(DMonomial(Monomial::one(n)));
        for (std::size_t k = 0; k < n && !term.is_zero(); ++k) {
            if (x[k] == 0)
                continue;
            term = homology::dp_product(term, DElement(n, divided_power_of_sum(n, h.rows()[k], x[k])));
        }
        out += term;
    }
    return out;
}

InvariantBasis invariant_basis(const hit::CohitBasis& cohits, const Budget& budget)
{
    const std::size_t q = cohits.dimension();
    budget.require_bytes(q * gf2::words_for(q) * sizeof(gf2::Word) * 4, "invariant system");
    const auto gens = generators(cohits.n);
    std::vector<gf2::BitRow> rows;
    for (const GLMatrix& g : gens) {
        // Column c of (M_g + I) is the class of g.m_c + m_c.
        std::vector<gf2::BitRow> block(q, gf2::BitRow(q));
        for (std::size_t c = 0; c < q; ++c) {
            gf2::BitRow col = cohits.coordinates_of(act_poly(g, Polynomial::of(cohits.representatives[c])));
            col.flip(c);
            for (std::uint32_t r : col.set_bits())
                block[r].set(c);
        }
        for (auto& r : block)
            if (!r.is_zero())
                rows.push_back(std::move(r));
    }
    gf2::EchelonBasis fixed = gf2::kernel_basis(rows, q);
    InvariantBasis out;
    out.n = cohits.n;
    out.d = cohits.d;
    out.cohit_dimension = q;
    for (const gf2::BitRow& x : fixed.rows()) {
        std::vector<Monomial> terms;
        for (std::uint32_t c : x.set_bits())
            terms.push_back(cohits.representatives[c]);
        out.classes.emplace_back(cohits.n, std::move(terms));
        out.coordinates.push_back(x);
    }
    return out;
}

InvariantBasis invariant_basis(std::size_t n, unsigned d, const Budget& budget)
{
    return invariant_basis(hit::cohit_basis(n, d, budget), budget);
}

CoinvariantReport::CoinvariantReport(std::shared_ptr<const homology::PrimitiveBasis> primitives,
                                     gf2::EchelonBasis relations)
    : primitives_(std::move(primitives)), relations_(std::move(relations))
{
    if (relations_.ambient_length() != primitives_->dimension())
        throw DimensionError("relations must live in primitive-basis coordinates");
    for (std::uint32_t i : gf2::quotient_representatives(primitives_->dimension(), relations_))
        representatives_.push_back(primitives_->element(i));
}

gf2::BitRow CoinvariantReport::class_of(const DElement& xi) const
{
    return relations_.reduce(primitives_->coordinates_of(xi));
}

CoinvariantReport coinvariant_classes(std::shared_ptr<const homology::PrimitiveBasis> primitives,
                                      const std::vector<GLMatrix>& gens)
{
    const std::size_t k = primitives->dimension();
    gf2::EchelonBasis relations(k);
    const std::vector<DElement> basis = primitives->elements();
    for (const GLMatrix& g : gens)
        for (const DElement& v : basis)
            relations.insert(primitives->coordinates_of(act_homology(g, v) + v));
    relations.canonicalize();
    return CoinvariantReport(std::move(primitives), std::move(relations));
}

CoinvariantReport coinvariant_classes(std::size_t n, unsigned d, const Budget& budget)
{
    auto prims = std::make_shared<const homology::PrimitiveBasis>(homology::primitive_basis(n, d, budget));
    return coinvariant_classes(std::move(prims), generators(n));
}

}  // namespace hitcalc::gl
