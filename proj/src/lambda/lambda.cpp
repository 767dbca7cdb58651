#include "hitcalc/lambda/lambda.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "hitcalc/errors.hpp"
#include "hitcalc/steenrod/arithmetic.hpp"

namespace hitcalc::lambda {

LambdaWord::LambdaWord(std::span<const int> indices)
{
    if (indices.size() > kMaxLength)
        throw DimensionError("lambda words are limited to length " + std::to_string(kMaxLength));
    for (int i : indices)
        if (i < 0 || i > 0xffff)
            throw DomainError("lambda index " + std::to_string(i) + " out of range");
    len_ = static_cast<std::uint8_t>(indices.size());
    std::copy(indices.begin(), indices.end(), idx_.begin());
}

LambdaWord::LambdaWord(std::initializer_list<int> indices)
    : LambdaWord(std::span<const int>(indices.begin(), indices.size()))
{
}

unsigned LambdaWord::weight() const
{
    unsigned w = 0;
    for (std::size_t i = 0; i < len_; ++i)
        w += idx_[i];
    return w;
}

LambdaWord LambdaWord::operator*(const LambdaWord& other) const
{
    if (len_ + other.len_ > kMaxLength)
        throw DimensionError("lambda words are limited to length " + std::to_string(kMaxLength));
    LambdaWord out = *this;
    std::copy(other.idx_.begin(), other.idx_.begin() + other.len_, out.idx_.begin() + len_);
    out.len_ = static_cast<std::uint8_t>(len_ + other.len_);
    return out;
}

LambdaWord LambdaWord::with_pair(std::size_t pos, unsigned a, unsigned b) const
{
    LambdaWord out = *this;
    out.idx_[pos] = static_cast<std::uint16_t>(a);
    out.idx_[pos + 1] = static_cast<std::uint16_t>(b);
    return out;
}

std::string LambdaWord::to_string() const
{
    if (len_ == 0)
        return "()";
    std::string s;
    for (std::size_t i = 0; i < len_; ++i) {
        if (i)
            s += ',';
        s += std::to_string(idx_[i]);
    }
    return s;
}

LambdaWord LambdaWord::parse(std::string_view text)
{
    if (text == "()")
        return {};
    std::vector<int> idx;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int v = 0;
        auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || end != part.data() + part.size() || v < 0)
            throw DomainError("malformed lambda word '" + std::string(text) + "'");
        idx.push_back(v);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return LambdaWord(std::span<const int>(idx));
}

std::size_t LambdaWordHash::operator()(const LambdaWord& w) const noexcept
{
    std::size_t h = w.length();
    for (std::size_t i = 0; i < w.length(); ++i)
        h = h * 1099511628211ull ^ (w[i] + 0x9e37u);
    return h;
}

LambdaElement::LambdaElement(std::vector<LambdaWord> terms)
{
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2)
            terms_.push_back(terms[i]);
        i = j;
    }
    for (const LambdaWord& w : terms_)
        if (w.length() != terms_.front().length() || w.weight() != terms_.front().weight())
            throw DomainError("lambda element is not homogeneous: " + to_string());
}

std::optional<std::size_t> LambdaElement::length() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.front().length();
}

std::optional<unsigned> LambdaElement::weight() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.front().weight();
}

LambdaElement& LambdaElement::operator+=(const LambdaElement& other)
{
    std::vector<LambdaWord> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    *this = LambdaElement(std::move(out));
    return *this;
}

LambdaElement operator*(const LambdaWord& w, const LambdaElement& e)
{
    std::vector<LambdaWord> out;
    for (const LambdaWord& t : e.terms_)
        out.push_back(w * t);
    return LambdaElement(std::move(out));
}

LambdaElement operator*(const LambdaElement& e, const LambdaWord& w)
{
    std::vector<LambdaWord> out;
    for (const LambdaWord& t : e.terms_)
        out.push_back(t * w);
    return LambdaElement(std::move(out));
}

std::string LambdaElement::to_string() const
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

LambdaElement LambdaElement::parse(std::string_view text)
{
    if (text == "0")
        return {};
    std::vector<LambdaWord> words;
    std::size_t pos = 0;
    while (true) {
        std::size_t plus = text.find('+', pos);
        words.push_back(LambdaWord::parse(
            text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos)));
        if (plus == std::string_view::npos)
            break;
        pos = plus + 1;
    }
    return LambdaElement(std::move(words));
}

bool binomial_mod2(long m, long r)
{
    if (r < 0)
        return false;
    if (m < 0)
        m = r - m - 1;
    return binomial_odd(static_cast<unsigned long>(m), static_cast<unsigned long>(r));
}

LambdaElement relation_element(int s, int k)
{
    if (s < -1 || k < -1)
        throw DomainError("relation indices must be >= -1");
    std::vector<LambdaWord> terms;
    auto add = [&](int a, int b) {
        if (a >= 0 && b >= 0)
            terms.push_back(LambdaWord{a, b});
    };
    add(s, k);
    for (int j = -1; s + k - j >= -1; ++j)
        if (binomial_mod2(j - k - 1, 2L * j - s))
            add(s + k - j, j);
    return LambdaElement(std::move(terms));
}

bool is_admissible(const LambdaWord& w)
{
    for (std::size_t i = 0; i + 1 < w.length(); ++i)
        if (rewritable(w[i], w[i + 1]))
            return false;
    return true;
}

std::vector<std::pair<unsigned, unsigned>> rewrite_pair(unsigned s, unsigned k)
{
    if (!rewritable(s, k))
        throw DomainError("pair " + std::to_string(s) + "," + std::to_string(k) + " is already in normal form");
    // Solving the relation for λ_s λ_k: j = k has coefficient C(-1, 2k - s) = 0,
    // and every other index stays >= 0 since j >= (s + 1) / 2 > k.
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned j = (s + 1) / 2; j <= s + k; ++j)
        if (binomial_mod2(static_cast<long>(j) - k - 1, 2L * j - s))
            out.emplace_back(s + k - j, j);
    return out;
}

LambdaAlgebra::LambdaAlgebra(Budget budget, std::size_t step_budget) : budget_(budget), step_budget_(step_budget) {}

LambdaElement LambdaAlgebra::reduce_word(const LambdaWord& w, Strategy strategy, std::size_t& steps)
{
    auto& memo = memo_[strategy == Strategy::Leftmost ? 0 : 1];
    if (auto it = memo.find(w); it != memo.end())
        return it->second;

    std::size_t pos = w.length();
    for (std::size_t i = 0; i + 1 < w.length(); ++i) {
        std::size_t p = strategy == Strategy::Leftmost ? i : w.length() - 2 - i;
        if (rewritable(w[p], w[p + 1])) {
            pos = p;
            break;
        }
    }
    if (pos == w.length())
        return memo.emplace(w, LambdaElement::of(w)).first->second;

    if (++steps > step_budget_)
        throw BudgetError("lambda rewriting exceeded " + std::to_string(step_budget_) + " steps at " + w.to_string());
    std::vector<LambdaWord> acc;
    for (auto [a, b] : rewrite_pair(w[pos], w[pos + 1])) {
        LambdaElement sub = reduce_word(w.with_pair(pos, a, b), strategy, steps);
        acc.insert(acc.end(), sub.terms().begin(), sub.terms().end());
    }
    return memo.emplace(w, LambdaElement(std::move(acc))).first->second;
}

LambdaElement LambdaAlgebra::normal_form(const LambdaWord& w, Strategy strategy)
{
    std::size_t steps = 0;
    return reduce_word(w, strategy, steps);
}

LambdaElement LambdaAlgebra::normal_form(const LambdaElement& e, Strategy strategy)
{
    std::size_t steps = 0;
    std::vector<LambdaWord> acc;
    for (const LambdaWord& w : e.terms()) {
        LambdaElement sub = reduce_word(w, strategy, steps);
        acc.insert(acc.end(), sub.terms().begin(), sub.terms().end());
    }
    return LambdaElement(std::move(acc));
}

LambdaElement LambdaAlgebra::differential(const LambdaWord& w)
{
    std::vector<LambdaWord> raw;
    for (std::size_t p = 0; p < w.length(); ++p) {
        const unsigned n = w[p];
        for (unsigned j = 1; 2 * j <= n; ++j) {
            if (!binomial_odd(n - j, j))
                continue;
            std::vector<int> idx;
            for (std::size_t q = 0; q < w.length(); ++q) {
                if (q == p) {
                    idx.push_back(static_cast<int>(j - 1));
                    idx.push_back(static_cast<int>(n - j));
                } else {
                    idx.push_back(static_cast<int>(w[q]));
                }
            }
            raw.emplace_back(std::span<const int>(idx));
        }
    }
    return normal_form(LambdaElement(std::move(raw)));
}

LambdaElement LambdaAlgebra::differential(const LambdaElement& e)
{
    std::vector<LambdaWord> acc;
    for (const LambdaWord& w : e.terms()) {
        LambdaElement sub = differential(w);
        acc.insert(acc.end(), sub.terms().begin(), sub.terms().end());
    }
    return LambdaElement(std::move(acc));
}

LambdaAlgebra::Bidegree& LambdaAlgebra::bidegree(std::size_t s, unsigned w)
{
    auto key = std::make_pair(s, w);
    if (auto it = bases_.find(key); it != bases_.end())
        return it->second;
    if (s > kMaxLength)
        throw DimensionError("lambda words are limited to length " + std::to_string(kMaxLength));

    Bidegree b;
    std::vector<int> cur(s);
    // Smallest weight of positions after one holding v: each index is at
    // least half (rounded up) of its predecessor.
    auto tail_min = [](unsigned v, std::size_t count) {
        unsigned total = 0;
        for (std::size_t i = 0; i < count; ++i) {
            v = (v + 1) / 2;
            total += v;
        }
        return total;
    };
    auto rec = [&](auto& self, std::size_t pos, unsigned lower, unsigned rem) -> void {
        if (pos + 1 == s) {
            if (rem >= lower) {
                cur[pos] = static_cast<int>(rem);
                b.words.emplace_back(std::span<const int>(cur));
                if (b.words.size() > budget_.max_words)
                    throw BudgetError("lambda bidegree (" + std::to_string(s) + ", " + std::to_string(w) +
                                      ") exceeds " + std::to_string(budget_.max_words) + " words");
            }
            return;
        }
        for (unsigned v = lower; v + tail_min(v, s - pos - 1) <= rem; ++v) {
            cur[pos] = static_cast<int>(v);
            self(self, pos + 1, (v + 1) / 2, rem - v);
        }
    };
    if (s == 0) {
        if (w == 0)
            b.words.emplace_back();
    } else {
        rec(rec, 0, 0, w);
    }
    for (std::size_t i = 0; i < b.words.size(); ++i)
        b.index.emplace(b.words[i], static_cast<std::uint32_t>(i));
    return bases_.emplace(key, std::move(b)).first->second;
}

const std::vector<LambdaWord>& LambdaAlgebra::bidegree_basis(std::size_t s, unsigned w)
{
    return bidegree(s, w).words;
}

std::size_t LambdaAlgebra::index_of(const LambdaWord& word)
{
    const Bidegree& b = bidegree(word.length(), word.weight());
    auto it = b.index.find(word);
    if (it == b.index.end())
        throw DomainError("word " + word.to_string() + " is not in normal form");
    return it->second;
}

gf2::BitRow LambdaAlgebra::to_row(const LambdaElement& normal, std::size_t s, unsigned w)
{
    const Bidegree& b = bidegree(s, w);
    gf2::BitRow row(b.words.size());
    for (const LambdaWord& word : normal.terms()) {
        if (word.length() != s || word.weight() != w)
            throw DomainError("word " + word.to_string() + " is outside bidegree (" + std::to_string(s) + ", " +
                              std::to_string(w) + ")");
        auto it = b.index.find(word);
        if (it == b.index.end())
            throw DomainError("word " + word.to_string() + " is not in normal form");
        row.flip(it->second);
    }
    return row;
}

const gf2::PeeledEchelon& LambdaAlgebra::image(std::size_t s, unsigned w)
{
    auto key = std::make_pair(s, w);
    if (auto it = images_.find(key); it != images_.end())
        return it->second;
    const std::vector<LambdaWord> source = bidegree(s, w).words;
    std::vector<gf2::SparseRow> rows;
    std::size_t width = 0;
    if (w > 0) {
        const Bidegree& target = bidegree(s + 1, w - 1);
        width = target.words.size();
        for (const LambdaWord& word : source) {
            gf2::SparseRow row;
            const LambdaElement dw = differential(word);
            for (const LambdaWord& t : dw.terms())
                row.push_back(target.index.at(t));
            std::sort(row.begin(), row.end());
            if (!row.empty())
                rows.push_back(std::move(row));
        }
    }
    return images_.emplace(key, gf2::echelonize_sparse(rows, width, budget_)).first->second;
}

std::size_t LambdaAlgebra::differential_rank(std::size_t s, unsigned w)
{
    return image(s, w).rank();
}

std::size_t LambdaAlgebra::homology_dim(std::size_t s, unsigned w)
{
    std::size_t dim = bidegree(s, w).words.size() - differential_rank(s, w);
    if (s > 0)
        dim -= differential_rank(s - 1, w + 1);
    return dim;
}

bool LambdaAlgebra::is_cycle(const LambdaElement& e)
{
    return differential(e).is_zero();
}

bool LambdaAlgebra::is_boundary(const LambdaElement& e)
{
    LambdaElement nf = normal_form(e);
    if (nf.is_zero())
        return true;
    const std::size_t s = *nf.length();
    const unsigned w = *nf.weight();
    if (s == 0)
        return false;
    return image(s - 1, w + 1).contains(to_row(nf, s, w));
}

bool LambdaAlgebra::class_equal(const LambdaElement& a, const LambdaElement& b)
{
    if (!a.is_zero() && !b.is_zero() && (a.length() != b.length() || a.weight() != b.weight()))
        throw DomainError("class comparison across bidegrees: " + a.to_string() + " vs " + b.to_string());
    return is_boundary(a + b);
}

LambdaAlgebra& default_algebra()
{
    thread_local LambdaAlgebra engine;
    return engine;
}

LambdaElement normal_form(const LambdaElement& e) { return default_algebra().normal_form(e); }
LambdaElement differential(const LambdaElement& e) { return default_algebra().differential(e); }
const std::vector<LambdaWord>& bidegree_basis(std::size_t s, unsigned w) { return default_algebra().bidegree_basis(s, w); }
std::size_t homology_dim(std::size_t s, unsigned w) { return default_algebra().homology_dim(s, w); }
bool is_cycle(const LambdaElement& e) { return default_algebra().is_cycle(e); }
bool is_boundary(const LambdaElement& e) { return default_algebra().is_boundary(e); }
bool class_equal(const LambdaElement& a, const LambdaElement& b) { return default_algebra().class_equal(a, b); }

}  // namespace hitcalc::lambda
