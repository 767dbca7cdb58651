#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hitcalc {

inline constexpr std::size_t kMaxVars = 8;

// u_1^{e_1} ... u_n^{e_n}. Ordered lexicographically on the exponent tuple,
// which is also the coordinate order of every monomial enumeration.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::span<const unsigned> exponents);
    Monomial(std::initializer_list<unsigned> exponents);
    static Monomial one(std::size_t vars);

    std::size_t vars() const { return n_; }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    unsigned degree() const;
    std::span<const unsigned> exponents() const { return {e_.data(), n_}; }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        for (std::size_t i = 0; i < a.n_; ++i)
            if (auto c = a.e_[i] <=> b.e_[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    // `e1.e2.....en`
    std::string to_string() const;
    static Monomial parse(std::string_view text);

private:
    std::array<unsigned, kMaxVars> e_{};
    std::size_t n_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

// F2-linear combination of monomials in a fixed number of variables. Terms
// are kept sorted and distinct; addition is symmetric difference.
class Polynomial {
public:
    explicit Polynomial(std::size_t vars = 0) : n_(vars) {}
    Polynomial(std::size_t vars, std::vector<Monomial> terms);  // cancels repeats
    static Polynomial of(const Monomial& m);

    std::size_t vars() const { return n_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // Degree of the terms when all share one; -1 for zero or mixed degrees.
    long homogeneous_degree() const;

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    Polynomial operator*(const Polynomial& other) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // `+`-joined monomials; `0` for the zero polynomial.
    std::string to_string() const;
    static Polynomial parse(std::string_view text, std::size_t vars = 0);

private:
    std::size_t n_ = 0;
    std::vector<Monomial> terms_;
};

}  // namespace hitcalc
