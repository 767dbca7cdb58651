#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hitcalc/budget.hpp"
#include "hitcalc/gf2/echelon.hpp"

namespace hitcalc::lambda {

inline constexpr std::size_t kMaxLength = 12;

// λ_{i_1} ... λ_{i_s} with every i_r >= 0. Words with λ_{-1} never get this
// far: they are zero in the algebra and callers drop them.
class LambdaWord {
public:
    LambdaWord() = default;
    explicit LambdaWord(std::span<const int> indices);
    LambdaWord(std::initializer_list<int> indices);

    std::size_t length() const { return len_; }
    unsigned weight() const;
    unsigned operator[](std::size_t i) const { return idx_[i]; }
    std::vector<unsigned> indices() const { return {idx_.begin(), idx_.begin() + len_}; }

    LambdaWord operator*(const LambdaWord& other) const;
    // Copy with positions [pos, pos + 2) replaced by (a, b).
    LambdaWord with_pair(std::size_t pos, unsigned a, unsigned b) const;

    friend bool operator==(const LambdaWord& a, const LambdaWord& b)
    {
        return a.len_ == b.len_ && std::equal(a.idx_.begin(), a.idx_.begin() + a.len_, b.idx_.begin());
    }
    friend std::strong_ordering operator<=>(const LambdaWord& a, const LambdaWord& b)
    {
        if (auto c = a.len_ <=> b.len_; c != 0)
            return c;
        for (std::size_t i = 0; i < a.len_; ++i)
            if (auto c = a.idx_[i] <=> b.idx_[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    // `15,3,3,2`; the empty word prints as `()`.
    std::string to_string() const;
    static LambdaWord parse(std::string_view text);

private:
    std::array<std::uint16_t, kMaxLength> idx_{};
    std::uint8_t len_ = 0;
};

struct LambdaWordHash {
    std::size_t operator()(const LambdaWord& w) const noexcept;
};

// F2 sum of words, sorted and distinct, homogeneous in (length, weight).
class LambdaElement {
public:
    LambdaElement() = default;
    explicit LambdaElement(std::vector<LambdaWord> terms);  // cancels repeats
    static LambdaElement of(const LambdaWord& w) { return LambdaElement({w}); }

    const std::vector<LambdaWord>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // Length and weight of the terms; nullopt for zero.
    std::optional<std::size_t> length() const;
    std::optional<unsigned> weight() const;

    LambdaElement& operator+=(const LambdaElement& other);
    friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
    friend LambdaElement operator*(const LambdaWord& w, const LambdaElement& e);
    friend LambdaElement operator*(const LambdaElement& e, const LambdaWord& w);
    friend bool operator==(const LambdaElement&, const LambdaElement&) = default;

    // `+`-joined words, `0` for zero.
    std::string to_string() const;
    static LambdaElement parse(std::string_view text);

private:
    std::vector<LambdaWord> terms_;
};

// Binomial coefficient mod 2 for any integer m and r. Negative m uses the
// polynomial extension C(m, r) = C(r - m - 1, r) (mod 2); r < 0 gives 0.
bool binomial_mod2(long m, long r);

// λ_s λ_k + sum_j C(j - k - 1, 2j - s) λ_{s+k-j} λ_j for s, k >= -1, with
// every word containing λ_{-1} dropped. Zero in the algebra.
LambdaElement relation_element(int s, int k);

// The pair λ_s λ_k is rewritten iff s > 2k; words without such a pair are
// the normal forms.
constexpr bool rewritable(unsigned s, unsigned k) { return s > 2 * k; }
bool is_admissible(const LambdaWord& w);

// λ_s λ_k for s > 2k, as the combination of pairs it rewrites to.
std::vector<std::pair<unsigned, unsigned>> rewrite_pair(unsigned s, unsigned k);

enum class Strategy { Leftmost, Rightmost };

// Rewriting, differential and bidegree homology, with caches. Not
// thread-safe; use one engine per thread.
class LambdaAlgebra {
public:
    explicit LambdaAlgebra(Budget budget = {}, std::size_t step_budget = 1'000'000);

    LambdaElement normal_form(const LambdaWord& w, Strategy strategy = Strategy::Leftmost);
    LambdaElement normal_form(const LambdaElement& e, Strategy strategy = Strategy::Leftmost);

    // d(λ_n) = sum_{j >= 1} C(n - j, j) λ_{j-1} λ_{n-j}, extended as a
    // derivation and normalised. Length goes up by one, weight down by one.
    LambdaElement differential(const LambdaElement& e);
    LambdaElement differential(const LambdaWord& w);

    // Normal-form words of length s and weight w in ascending order.
    const std::vector<LambdaWord>& bidegree_basis(std::size_t s, unsigned w);
    std::size_t index_of(const LambdaWord& word);

    // Rank of d from (s, w) to (s + 1, w - 1).
    std::size_t differential_rank(std::size_t s, unsigned w);
    std::size_t homology_dim(std::size_t s, unsigned w);
    bool is_cycle(const LambdaElement& e);
    // e lies in d(Λ^{s-1, w+1}); e must be homogeneous.
    bool is_boundary(const LambdaElement& e);
    // normal_form(a + b) is a boundary. Throws DomainError on a bidegree mismatch.
    bool class_equal(const LambdaElement& a, const LambdaElement& b);

    gf2::BitRow to_row(const LambdaElement& normal, std::size_t s, unsigned w);

private:
    struct Bidegree {
        std::vector<LambdaWord> words;
        std::unordered_map<LambdaWord, std::uint32_t, LambdaWordHash> index;
    };
    Bidegree& bidegree(std::size_t s, unsigned w);
    const gf2::PeeledEchelon& image(std::size_t s, unsigned w);  // d(Λ^{s,w}) inside Λ^{s+1,w-1}
    LambdaElement reduce_word(const LambdaWord& w, Strategy strategy, std::size_t& steps);

    Budget budget_;
    std::size_t step_budget_;
    std::unordered_map<LambdaWord, LambdaElement, LambdaWordHash> memo_[2];
    std::map<std::pair<std::size_t, unsigned>, Bidegree> bases_;
    std::map<std::pair<std::size_t, unsigned>, gf2::PeeledEchelon> images_;
};

// Shared engine for the calling thread.
LambdaAlgebra& default_algebra();

LambdaElement normal_form(const LambdaElement& e);
LambdaElement differential(const LambdaElement& e);
const std::vector<LambdaWord>& bidegree_basis(std::size_t s, unsigned w);
std::size_t homology_dim(std::size_t s, unsigned w);
bool is_cycle(const LambdaElement& e);
bool is_boundary(const LambdaElement& e);
bool class_equal(const LambdaElement& a, const LambdaElement& b);

}  // namespace hitcalc::lambda
