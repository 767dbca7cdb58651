#include "hitcalc/steenrod/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hitcalc/errors.hpp"

namespace hitcalc {

Monomial::Monomial(std::span<const unsigned> exponents)
{
    if (exponents.size() > kMaxVars)
        throw DimensionError("at most " + std::to_string(kMaxVars) + " variables are supported");
    n_ = exponents.size();
    std::copy(exponents.begin(), exponents.end(), e_.begin());
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size()))
{
}

Monomial Monomial::one(std::size_t vars)
{
    std::array<unsigned, kMaxVars> zero{};
    return Monomial(std::span<const unsigned>(zero.data(), vars));
}

unsigned Monomial::degree() const
{
    return std::accumulate(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(n_), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (n_ != other.n_)
        throw DimensionError("monomial product across different variable counts");
    Monomial r = *this;
    for (std::size_t i = 0; i < n_; ++i)
        r.e_[i] += other.e_[i];
    return r;
}

std::string Monomial::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
        if (i)
            s += '.';
        s += std::to_string(e_[i]);
    }
    return s;
}

Monomial Monomial::parse(std::string_view text)
{
    std::vector<unsigned> e;
    std::size_t pos = 0;
    while (true) {
        std::size_t dot = text.find('.', pos);
        std::string_view part = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size())
            throw DomainError("malformed monomial '" + std::string(text) + "'");
        e.push_back(v);
        if (dot == std::string_view::npos)
            break;
        pos = dot + 1;
    }
    return Monomial(e);
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = m.vars();
    for (unsigned e : m.exponents())
        h = h * 1000003u ^ e;
    return h;
}

Polynomial::Polynomial(std::size_t vars, std::vector<Monomial> terms) : n_(vars)
{
    for (const Monomial& m : terms)
        if (m.vars() != vars)
            throw DimensionError("polynomial term with wrong variable count");
    std::sort(terms.begin(), terms.end());
    // Keep monomials that occur an odd number of times.
    std::vector<Monomial> out;
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

Polynomial Polynomial::of(const Monomial& m)
{
    Polynomial p(m.vars());
    p.terms_.push_back(m);
    return p;
}

long Polynomial::homogeneous_degree() const
{
    if (terms_.empty())
        return -1;
    long d = terms_.front().degree();
    for (const Monomial& m : terms_)
        if (static_cast<long>(m.degree()) != d)
            return -1;
    return d;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.n_ != n_ && !other.terms_.empty() && !terms_.empty())
        throw DimensionError("polynomial sum across different variable counts");
    if (terms_.empty())
        n_ = other.n_;
    std::vector<Monomial> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    std::vector<Monomial> prod;
    prod.reserve(terms_.size() * other.terms_.size());
    for (const Monomial& a : terms_)
        for (const Monomial& b : other.terms_)
            prod.push_back(a * b);
    return Polynomial(n_, std::move(prod));
}

std::string Polynomial::to_string() const
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

Polynomial Polynomial::parse(std::string_view text, std::size_t vars)
{
    std::vector<Monomial> terms;
    if (text == "0")
        return Polynomial(vars);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t plus = text.find('+', pos);
        terms.push_back(Monomial::parse(text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos)));
        if (plus == std::string_view::npos)
            break;
        pos = plus + 1;
    }
    std::size_t n = vars ? vars : terms.front().vars();
    return Polynomial(n, std::move(terms));
}

}  // namespace hitcalc
