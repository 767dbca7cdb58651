#pragma once

// Slow, independent reference computations for the tests. Nothing here calls
// into the library's algorithms; only plain containers are shared.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Exps = std::vector<unsigned>;
using Poly = std::set<Exps>;  // F2 sum of monomials

inline void toggle(Poly& p, const Exps& e)
{
    if (!p.insert(e).second)
        p.erase(e);
}

// Binomial coefficients mod 2 by Pascal's rule.
inline bool pascal_odd(unsigned a, unsigned b)
{
    static std::vector<std::vector<bool>> table;
    if (b > a)
        return false;
    while (table.size() <= a) {
        const std::size_t r = table.size();
        std::vector<bool> row(r + 1, true);
        for (std::size_t j = 1; j < r; ++j)
            row[j] = table[r - 1][j - 1] != table[r - 1][j];
        table.push_back(row);
    }
    return table[a][b];
}

// Sq^k(u^e) = C(e, k) u^{e+k}, multiplied out across the variables: the
// degree (deg + k) part of prod_i (u_i + u_i^2)^{e_i}.
inline Poly sq(unsigned k, const Exps& m)
{
    Poly acc{Exps(m.size(), 0)};
    for (std::size_t i = 0; i < m.size(); ++i) {
        Poly next;
        for (const Exps& t : acc)
            for (unsigned j = 0; j <= m[i]; ++j)
                if (pascal_odd(m[i], j)) {
                    Exps e = t;
                    e[i] = m[i] + j;
                    toggle(next, e);
                }
        acc = std::move(next);
    }
    unsigned deg = 0;
    for (unsigned e : m)
        deg += e;
    Poly out;
    for (const Exps& t : acc) {
        unsigned dt = 0;
        for (unsigned e : t)
            dt += e;
        if (dt == deg + k)
            toggle(out, t);
    }
    return out;
}

inline std::vector<Exps> monomials(std::size_t n, unsigned d)
{
    std::vector<Exps> out;
    Exps cur(n, 0);
    auto rec = [&](auto& self, std::size_t i, unsigned rem) -> void {
        if (i + 1 == n) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (unsigned v = 0; v <= rem; ++v) {
            cur[i] = v;
            self(self, i + 1, rem - v);
        }
    };
    if (n > 0)
        rec(rec, 0, d);
    return out;
}

// Rank over F2 by plain elimination on sets of column indices.
inline std::size_t rank(std::vector<std::set<std::size_t>> rows)
{
    std::map<std::size_t, std::set<std::size_t>> pivots;
    std::size_t r = 0;
    for (auto row : rows) {
        while (!row.empty()) {
            auto it = pivots.find(*row.begin());
            if (it == pivots.end())
                break;
            for (std::size_t c : it->second)
                if (!row.insert(c).second)
                    row.erase(c);
        }
        if (!row.empty()) {
            pivots.emplace(*row.begin(), row);
            ++r;
        }
    }
    return r;
}

// dim P^d_n / span{Sq^k(m) : k >= 1}, using every square, not just 2-powers.
inline std::size_t cohit_dim_all_squares(std::size_t n, unsigned d)
{
    const auto target = monomials(n, d);
    std::map<Exps, std::size_t> index;
    for (std::size_t i = 0; i < target.size(); ++i)
        index[target[i]] = i;
    std::vector<std::set<std::size_t>> rows;
    for (unsigned k = 1; k <= d; ++k)
        for (const Exps& m : monomials(n, d - k)) {
            std::set<std::size_t> row;
            for (const Exps& t : sq(k, m))
                row.insert(index.at(t));
            if (!row.empty())
                rows.push_back(std::move(row));
        }
    return target.size() - rank(std::move(rows));
}

// Every invertible n x n matrix over F2, as row bitmasks.
inline std::vector<std::vector<std::uint32_t>> all_invertible(std::size_t n)
{
    std::vector<std::vector<std::uint32_t>> out;
    const std::uint32_t cells = static_cast<std::uint32_t>(n * n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
        std::vector<std::uint32_t> rows(n);
        for (std::size_t i = 0; i < n; ++i)
            rows[i] = static_cast<std::uint32_t>((bits >> (i * n)) & ((1u << n) - 1));
        std::vector<std::set<std::size_t>> sets;
        for (std::uint32_t r : rows) {
            std::set<std::size_t> s;
            for (std::size_t j = 0; j < n; ++j)
                if ((r >> j) & 1u)
                    s.insert(j);
            sets.push_back(s);
        }
        if (rank(sets) == n)
            out.push_back(rows);
    }
    return out;
}

// The classical lambda algebra: admissible iff 2 i_r >= i_{r+1}, relations
//   λ_i λ_{2i+1+m} = sum_{j>=0} C(m - j - 1, j) λ_{i+m-j} λ_{2i+1+j}  (m >= 0)
// and d(λ_k) = sum_{j>=1} C(k - j, j) λ_{k-j} λ_{j-1}.
using Word = std::vector<unsigned>;
using Elem = std::set<Word>;

inline Elem classical_normal_form(const Word& w)
{
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        const unsigned i = w[p], k = w[p + 1];
        if (k <= 2 * i)
            continue;
        const unsigned m = k - 2 * i - 1;
        Elem out;
        for (unsigned j = 0; j + 1 <= m && j <= m - j - 1; ++j) {
            if (!pascal_odd(m - j - 1, j))
                continue;
            Word v = w;
            v[p] = i + m - j;
            v[p + 1] = 2 * i + 1 + j;
            for (const Word& x : classical_normal_form(v))
                toggle(out, x);
        }
        return out;
    }
    return {w};
}

inline Elem classical_differential(const Word& w)
{
    Elem out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        const unsigned k = w[p];
        for (unsigned j = 1; 2 * j <= k; ++j) {
            if (!pascal_odd(k - j, j))
                continue;
            Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            v.push_back(k - j);
            v.push_back(j - 1);
            v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 1, w.end());
            for (const Word& x : classical_normal_form(v))
                toggle(out, x);
        }
    }
    return out;
}

inline Word reversed(Word w)
{
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace oracle
