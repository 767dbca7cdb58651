#include "hitcalc/homology/divided.hpp"

#include <algorithm>
#include <string>

#include "hitcalc/errors.hpp"
#include "hitcalc/parallel.hpp"

namespace hitcalc::homology {

std::string DMonomial::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < e_.vars(); ++i) {
        if (i)
            s += '.';
        s += '(' + std::to_string(e_[i]) + ')';
    }
    return s;
}

DMonomial DMonomial::parse(std::string_view text)
{
    // Each dot-separated part is `(digits)`.
    std::string plain;
    std::size_t pos = 0;
    while (true) {
        std::size_t dot = text.find('.', pos);
        std::string_view part = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        if (part.size() < 3 || part.front() != '(' || part.back() != ')')
            throw DomainError("malformed d-monomial '" + std::string(text) + "'");
        if (!plain.empty())
            plain += '.';
        plain += part.substr(1, part.size() - 2);
        if (dot == std::string_view::npos)
            break;
        pos = dot + 1;
    }
    return DMonomial(Monomial::parse(plain));
}

DElement::DElement(std::size_t vars, std::vector<DMonomial> terms) : n_(vars)
{
    for (const DMonomial& m : terms)
        if (m.vars() != vars)
            throw DimensionError("d-element term with wrong variable count");
    std::sort(terms.begin(), terms.end());
    std::vector<DMonomial> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) & 1)
            out.push_back(terms[i]);
        i = j;
    }
    terms_ = std::move(out);
}

DElement DElement::of(const DMonomial& m)
{
    DElement e(m.vars());
    e.terms_.push_back(m);
    return e;
}

long DElement::homogeneous_degree() const
{
    if (terms_.empty())
        return -1;
    long d = terms_.front().degree();
    for (const DMonomial& m : terms_)
        if (static_cast<long>(m.degree()) != d)
            return -1;
    return d;
}

DElement& DElement::operator+=(const DElement& other)
{
    if (other.n_ != n_ && !other.terms_.empty() && !terms_.empty())
        throw DimensionError("d-element sum across different variable counts");
    if (terms_.empty())
        n_ = other.n_;
    std::vector<DMonomial> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

std::string DElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i)
            s += '+';
        s += terms_[i].to_string();
    }
    return s;
}

DElement DElement::parse(std::string_view text, std::size_t vars)
{
    if (text == "0")
        return DElement(vars);
    std::vector<DMonomial> terms;
    std::size_t pos = 0;
    while (true) {
        std::size_t plus = text.find('+', pos);
        terms.push_back(DMonomial::parse(text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos)));
        if (plus == std::string_view::npos)
            break;
        pos = plus + 1;
    }
    std::size_t n = vars ? vars : terms.front().vars();
    return DElement(n, std::move(terms));
}

bool pair(const DElement& xi, const Polynomial& f)
{
    if (!xi.is_zero() && !f.is_zero() && xi.vars() != f.vars())
        throw DomainError("pairing across different variable counts");
    // Both term lists are sorted in the same order.
    bool parity = false;
    auto a = xi.terms().begin();
    auto b = f.terms().begin();
    while (a != xi.terms().end() && b != f.terms().end()) {
        if (a->dual() < *b) {
            ++a;
        } else if (*b < a->dual()) {
            ++b;
        } else {
            parity = !parity;
            ++a;
            ++b;
        }
    }
    return parity;
}

DElement dp_product(const DMonomial& x, const DMonomial& y)
{
    if (x.vars() != y.vars())
        throw DimensionError("divided power product across different variable counts");
    Monomial sum = x.dual() * y.dual();
    for (std::size_t i = 0; i < x.vars(); ++i)
        if (!binomial_odd(sum[i], x[i]))
            return DElement(x.vars());
    return DElement::of(DMonomial(sum));
}

DElement dp_product(const DElement& x, const DElement& y)
{
    std::vector<DMonomial> terms;
    for (const DMonomial& a : x.terms())
        for (const DMonomial& b : y.terms()) {
            DElement ab = dp_product(a, b);
            terms.insert(terms.end(), ab.terms().begin(), ab.terms().end());
        }
    return DElement(x.vars(), std::move(terms));
}

DElement dual_sq(unsigned k, const DElement& xi)
{
    std::vector<DMonomial> terms;
    for (const DMonomial& m : xi.terms())
        for_each_dual_sq_term(k, m, [&](const DMonomial& t) { terms.push_back(t); });
    return DElement(xi.vars(), std::move(terms));
}

PrimitiveBasis::PrimitiveBasis(std::shared_ptr<const MonomialSpace> space, gf2::EchelonBasis basis)
    : space_(std::move(space)), basis_(std::move(basis))
{
    if (basis_.ambient_length() != space_->size())
        throw DimensionError("primitive basis width does not match the enumeration");
}

std::vector<DElement> PrimitiveBasis::elements() const
{
    std::vector<DElement> out;
    for (const gf2::BitRow& r : basis_.rows())
        out.push_back(to_element(r));
    return out;
}

gf2::BitRow PrimitiveBasis::to_row(const DElement& xi) const
{
    gf2::BitRow r(space_->size());
    for (const DMonomial& m : xi.terms())
        r.flip(space_->index_of(m.dual()));
    return r;
}

DElement PrimitiveBasis::to_element(const gf2::BitRow& row) const
{
    std::vector<DMonomial> terms;
    for (std::uint32_t i : row.set_bits())
        terms.emplace_back(space_->at(i));
    return DElement(space_->vars(), std::move(terms));
}

gf2::BitRow PrimitiveBasis::coordinates_of(const DElement& xi) const
{
    // Testing the squares is far cheaper than reducing against the basis,
    // and a primitive is determined by its pivot coordinates.
    if (!xi.is_zero() && (xi.vars() != vars() || xi.homogeneous_degree() != static_cast<long>(degree())))
        throw DomainError("element is outside the primitive space: " + xi.to_string());
    if (!is_primitive(xi))
        throw DomainError("element is not primitive: " + xi.to_string());
    gf2::BitRow row = to_row(xi);
    const auto& pivots = basis_.pivots();
    gf2::BitRow out(pivots.size());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (row.test(pivots[i]))
            out.set(i);
    return out;
}

PrimitiveBasis primitive_basis(std::size_t n, unsigned d, const Budget& budget)
{
    if (n == 0 || n > kMaxVars)
        throw DomainError("variable count must be in 1.." + std::to_string(kMaxVars));
    budget.require_rows(count_monomials(n, d), "monomial enumeration");
    auto space = std::make_shared<const MonomialSpace>(n, d);
    const std::size_t width = space->size();

    // One block of rows per k = 2^i, indexed by the degree-(d-k) d-monomials.
    std::vector<unsigned> ks;
    std::vector<std::unique_ptr<MonomialSpace>> targets;
    std::vector<std::size_t> offsets;
    std::size_t total_rows = 0;
    for (unsigned k = 1; k <= d; k *= 2) {
        ks.push_back(k);
        targets.push_back(std::make_unique<MonomialSpace>(n, d - k));
        offsets.push_back(total_rows);
        total_rows += targets.back()->size();
    }
    budget.require_rows(total_rows, "primitive kernel system");

    // Column m of the stacked matrix is the list of (Sq^k)_* a^{(m)}.
    using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (row, column)
    std::vector<std::vector<Entry>> parts(std::max(1u, budget.threads));
    parallel_chunks(width, budget.threads, [&](std::size_t chunk, std::size_t b, std::size_t e) {
        auto& out = parts[chunk];
        for (std::size_t col = b; col < e; ++col) {
            DMonomial x(space->at(col));
            for (std::size_t j = 0; j < ks.size(); ++j)
                for_each_dual_sq_term(ks[j], x, [&](const DMonomial& t) {
                    out.emplace_back(static_cast<std::uint32_t>(offsets[j] + targets[j]->index_of(t.dual())),
                                     static_cast<std::uint32_t>(col));
                });
        }
    });
    std::vector<gf2::SparseRow> rows(total_rows);
    for (const auto& part : parts)
        for (const auto& [r, c] : part)
            rows[r].push_back(c);
    std::erase_if(rows, [](const gf2::SparseRow& r) { return r.empty(); });

    gf2::EchelonBasis kernel = gf2::kernel_basis_sparse(rows, width, budget);
    return PrimitiveBasis(std::move(space), std::move(kernel));
}

bool is_primitive(const DElement& xi)
{
    long d = xi.homogeneous_degree();
    if (d < 0)
        return xi.is_zero();
    for (unsigned k = 1; k <= static_cast<unsigned>(d); k *= 2)
        if (!dual_sq(k, xi).is_zero())
            return false;
    return true;
}

DElement dual_kameko_up(const DElement& xi)
{
    std::vector<DMonomial> terms;
    for (const DMonomial& m : xi.terms()) {
        Monomial e = m.dual();
        for (std::size_t i = 0; i < e.vars(); ++i)
            e[i] = 2 * e[i] + 1;
        terms.emplace_back(e);
    }
    return DElement(xi.vars(), std::move(terms));
}

unsigned zeta_degree(unsigned t, unsigned s, unsigned u)
{
    return (1u << (t + s + u)) + (1u << (t + s)) + (1u << t) - 3;
}

DElement zeta_element(ZetaFamily family, unsigned t, unsigned s, unsigned u)
{
    auto p = [](unsigned j) { return 1u << j; };
    std::vector<DMonomial> terms;
    switch (family) {
    case ZetaFamily::A:
        if (s != 1 || u != 2 || t < 2)
            throw DomainError("zeta family A needs s = 1, u = 2, t >= 2");
        terms = {
            {0, p(t + 2) - 1, p(t + 2) - 1, 3 * p(t) - 1},
            {0, p(t + 2) - 1, 5 * p(t) - 1, p(t + 1) - 1},
            {0, 6 * p(t) - 1, 3 * p(t) - 1, p(t + 1) - 1},
            {0, 7 * p(t) - 1, p(t + 1) - 1, p(t + 1) - 1},
        };
        break;
    case ZetaFamily::B:
        if (t != 1 || s != 2 || u < 1)
            throw DomainError("zeta family B needs t = 1, s = 2, u >= 1");
        terms = {
            {p(u + 3) - 1, 3, 3, 2},
            {p(u + 3) - 1, 3, 4, 1},
            {p(u + 3) - 1, 5, 2, 1},
            {p(u + 3) - 1, 6, 1, 1},
        };
        break;
    case ZetaFamily::C:
        if (t < 2 || s < 2 || u < 2)
            throw DomainError("zeta family C needs t, s, u >= 2");
        terms = {{0, p(t) - 1, p(s + t) - 1, p(s + t + u) - 1}};
        break;
    }
    return DElement(4, std::move(terms));
}

}  // namespace hitcalc::homology
