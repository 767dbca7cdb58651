#include "hitcalc/gf2/echelon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hitcalc/errors.hpp"

namespace hitcalc::gf2 {

EchelonBasis::EchelonBasis(std::size_t ambient_length)
    : ambient_(ambient_length), row_of_pivot_(ambient_length, -1), pivot_mask_(ambient_length)
{
}

void EchelonBasis::require_length(const BitRow& v) const
{
    if (v.length() != ambient_)
        throw DimensionError("row of length " + std::to_string(v.length()) + " against basis of ambient length " +
                             std::to_string(ambient_));
}

EchelonBasis EchelonBasis::from_canonical_rows(std::size_t ambient_length, std::vector<BitRow> rows)
{
    EchelonBasis b(ambient_length);
    std::size_t previous = kNoBit;
    for (const BitRow& r : rows) {
        b.require_length(r);
        std::size_t p = r.first_set();
        if (p == kNoBit)
            throw DomainError("canonical rows must be nonzero");
        if (previous != kNoBit && p <= previous)
            throw DomainError("canonical rows must have strictly increasing pivots");
        previous = p;
        b.pivot_mask_.set(p);
    }
    const auto& k = active_kernels();
    std::vector<Word> scratch(words_for(ambient_length));
    for (const BitRow& r : rows) {
        auto w = r.words();
        auto m = b.pivot_mask_.words();
        for (std::size_t i = 0; i < w.size(); ++i)
            scratch[i] = w[i] & m[i];
        if (k.popcount(scratch.data(), scratch.size()) != 1)
            throw DomainError("canonical rows must vanish on the other pivot columns");
    }
    b.pivots_.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto p = static_cast<std::uint32_t>(rows[i].first_set());
        b.pivots_.push_back(p);
        b.row_of_pivot_[p] = static_cast<std::int32_t>(i);
    }
    b.rows_ = std::move(rows);
    return b;
}

void EchelonBasis::canonicalize() const
{
    if (sorted_)
        return;
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<BitRow> rows;
    std::vector<std::uint32_t> pivots;
    rows.reserve(rows_.size());
    pivots.reserve(rows_.size());
    for (std::size_t i : order) {
        rows.push_back(std::move(rows_[i]));
        pivots.push_back(pivots_[i]);
    }
    rows_ = std::move(rows);
    pivots_ = std::move(pivots);
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        row_of_pivot_[pivots_[i]] = static_cast<std::int32_t>(i);
    sorted_ = true;
}

const std::vector<BitRow>& EchelonBasis::rows() const
{
    canonicalize();
    return rows_;
}

const std::vector<std::uint32_t>& EchelonBasis::pivots() const
{
    canonicalize();
    return pivots_;
}

BitRow EchelonBasis::reduce(BitRow v) const
{
    require_length(v);
    const auto& k = active_kernels();
    auto vw = v.words();
    auto mw = pivot_mask_.words();
    for (std::size_t w = 0; w < vw.size(); ++w) {
        Word x = vw[w] & mw[w];
        while (x) {
            std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
            const BitRow& row = rows_[static_cast<std::size_t>(row_of_pivot_[c])];
            // Rows vanish before their pivot, so only words from w onward change.
            k.xor_into(vw.data() + w, row.words().data() + w, vw.size() - w);
            x &= x - 1;
        }
    }
    return v;
}

bool EchelonBasis::insert(BitRow v)
{
    BitRow r = reduce(std::move(v));
    std::size_t p = r.first_set();
    if (p == kNoBit)
        return false;
    const auto& k = active_kernels();
    const std::size_t w0 = p / kWordBits;
    for (BitRow& row : rows_) {
        if (row.test(p))
            k.xor_into(row.words().data() + w0, r.words().data() + w0, r.word_count() - w0);
    }
    row_of_pivot_[p] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    if (!pivots_.empty() && pivots_.back() > p)
        sorted_ = false;
    pivots_.push_back(static_cast<std::uint32_t>(p));
    pivot_mask_.set(p);
    return true;
}

bool operator==(const EchelonBasis& a, const EchelonBasis& b)
{
    return a.ambient_ == b.ambient_ && a.rows() == b.rows();
}

BitRow reduce_against(const BitRow& v, const EchelonBasis& b)
{
    return b.reduce(v);
}

std::pair<EchelonBasis, bool> insert(EchelonBasis b, const BitRow& v)
{
    bool grew = b.insert(v);
    b.canonicalize();
    return {std::move(b), grew};
}

namespace {

// Annihilator of the span of a reduced basis: one vector per free column f,
// e_f plus e_p for every pivot row p with a one in column f.
EchelonBasis annihilator_of(const EchelonBasis& b)
{
    const std::size_t width = b.ambient_length();
    std::vector<std::int32_t> free_index(width, -1);
    std::vector<BitRow> kernel;
    for (std::size_t c = 0; c < width; ++c) {
        if (!b.is_pivot(c)) {
            free_index[c] = static_cast<std::int32_t>(kernel.size());
            kernel.emplace_back(width).set(c);
        }
    }
    const auto& rows = b.rows();
    const auto& pivots = b.pivots();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t c = rows[i].first_set(pivots[i] + 1); c != kNoBit; c = rows[i].first_set(c + 1))
            kernel[static_cast<std::size_t>(free_index[c])].set(pivots[i]);
    }
    EchelonBasis out(width);
    for (BitRow& x : kernel)
        out.insert(std::move(x));
    out.canonicalize();
    return out;
}

}  // namespace

EchelonBasis kernel_basis(std::span<const BitRow> rows, std::size_t width)
{
    EchelonBasis b(width);
    for (const BitRow& r : rows) {
        if (r.length() != width)
            throw DimensionError("kernel_basis: row of length " + std::to_string(r.length()) + ", expected " +
                                 std::to_string(width));
        b.insert(r);
    }
    return annihilator_of(b);
}

std::vector<std::uint32_t> quotient_representatives(std::size_t ambient_coords, const EchelonBasis& b)
{
    if (b.ambient_length() != ambient_coords)
        throw DimensionError("quotient_representatives: basis ambient length " +
                             std::to_string(b.ambient_length()) + " vs " + std::to_string(ambient_coords));
    std::vector<std::uint32_t> out;
    out.reserve(ambient_coords - b.rank());
    for (std::size_t c = 0; c < ambient_coords; ++c)
        if (!b.is_pivot(c))
            out.push_back(static_cast<std::uint32_t>(c));
    return out;
}

// ---------------------------------------------------------------------------
// PeeledEchelon

bool PeeledEchelon::is_pivot(std::size_t column) const
{
    if (unit_mask_.test(column))
        return true;
    std::int32_t c = compact_of_[column];
    return c >= 0 && residual_.is_pivot(static_cast<std::size_t>(c));
}

std::vector<std::uint32_t> PeeledEchelon::pivot_columns() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < width_; ++c)
        if (is_pivot(c))
            out.push_back(static_cast<std::uint32_t>(c));
    return out;
}

std::vector<std::uint32_t> PeeledEchelon::non_pivot_columns() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < width_; ++c)
        if (!is_pivot(c))
            out.push_back(static_cast<std::uint32_t>(c));
    return out;
}

BitRow PeeledEchelon::reduce(BitRow v) const
{
    if (v.length() != width_)
        throw DimensionError("row of length " + std::to_string(v.length()) + " against basis of width " +
                             std::to_string(width_));
    auto vw = v.words();
    auto uw = unit_mask_.words();
    for (std::size_t i = 0; i < vw.size(); ++i)
        vw[i] &= ~uw[i];
    if (residual_.rank() == 0)
        return v;
    BitRow compact(residual_cols_.size());
    bool any = false;
    for (std::size_t i = 0; i < residual_cols_.size(); ++i) {
        if (v.test(residual_cols_[i])) {
            compact.set(i);
            any = true;
        }
    }
    if (!any)
        return v;
    compact = residual_.reduce(std::move(compact));
    for (std::size_t i = 0; i < residual_cols_.size(); ++i) {
        if (compact.test(i))
            v.set(residual_cols_[i]);
        else
            v.reset(residual_cols_[i]);
    }
    return v;
}

EchelonBasis PeeledEchelon::materialize() const
{
    std::vector<BitRow> rows;
    rows.reserve(rank());
    const auto& res_rows = residual_.rows();
    const auto& res_piv = residual_.pivots();
    std::size_t j = 0;
    for (std::size_t c = 0; c < width_; ++c) {
        if (unit_mask_.test(c)) {
            rows.emplace_back(width_).set(c);
        } else if (j < res_piv.size() && residual_cols_[res_piv[j]] == c) {
            BitRow r(width_);
            for (std::uint32_t b : res_rows[j].set_bits())
                r.set(residual_cols_[b]);
            rows.push_back(std::move(r));
            ++j;
        }
    }
    return EchelonBasis::from_canonical_rows(width_, std::move(rows));
}

EchelonBasis PeeledEchelon::annihilator() const
{
    // Kernel vectors never touch unit columns, so work over the non-unit
    // coordinates (order preserved) and lift at the end.
    std::vector<std::uint32_t> support;
    std::vector<std::int32_t> support_of(width_, -1);
    for (std::size_t c = 0; c < width_; ++c) {
        if (!unit_mask_.test(c)) {
            support_of[c] = static_cast<std::int32_t>(support.size());
            support.push_back(static_cast<std::uint32_t>(c));
        }
    }
    const std::size_t m = support.size();
    std::vector<BitRow> kernel;
    std::vector<std::int32_t> kernel_of(m, -1);
    for (std::size_t s = 0; s < m; ++s) {
        if (!is_pivot(support[s])) {
            kernel_of[s] = static_cast<std::int32_t>(kernel.size());
            kernel.emplace_back(m).set(s);
        }
    }
    const auto& res_rows = residual_.rows();
    const auto& res_piv = residual_.pivots();
    for (std::size_t i = 0; i < res_rows.size(); ++i) {
        auto pivot_support = static_cast<std::size_t>(support_of[residual_cols_[res_piv[i]]]);
        for (std::size_t b = res_rows[i].first_set(res_piv[i] + 1); b != kNoBit; b = res_rows[i].first_set(b + 1)) {
            auto s = static_cast<std::size_t>(support_of[residual_cols_[b]]);
            kernel[static_cast<std::size_t>(kernel_of[s])].set(pivot_support);
        }
    }
    EchelonBasis compact(m);
    for (BitRow& x : kernel)
        compact.insert(std::move(x));
    std::vector<BitRow> lifted;
    lifted.reserve(compact.rank());
    for (const BitRow& r : compact.rows()) {
        BitRow full(width_);
        for (std::uint32_t b : r.set_bits())
            full.set(support[b]);
        lifted.push_back(std::move(full));
    }
    return EchelonBasis::from_canonical_rows(width_, std::move(lifted));
}

PeeledEchelon echelonize_sparse(std::span<const SparseRow> rows, std::size_t width, const Budget& budget)
{
    budget.require_rows(rows.size(), "sparse elimination");
    PeeledEchelon out;
    out.width_ = width;
    out.unit_mask_ = BitRow(width);
    out.compact_of_.assign(width, -1);

    // Column -> rows incidence in CSR form.
    std::vector<std::uint32_t> col_start(width + 1, 0);
    for (const SparseRow& r : rows) {
        for (std::uint32_t c : r) {
            if (c >= width)
                throw DimensionError("sparse row entry " + std::to_string(c) + " outside width " +
                                     std::to_string(width));
            ++col_start[c + 1];
        }
    }
    for (std::size_t c = 0; c < width; ++c)
        col_start[c + 1] += col_start[c];
    std::vector<std::uint32_t> col_rows(col_start[width]);
    {
        std::vector<std::uint32_t> fill(col_start.begin(), col_start.end() - 1);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::uint32_t c : rows[r])
                col_rows[fill[c]++] = static_cast<std::uint32_t>(r);
    }

    std::vector<std::uint32_t> live(rows.size());
    std::vector<std::uint32_t> queue;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        live[r] = static_cast<std::uint32_t>(rows[r].size());
        if (live[r] == 1)
            queue.push_back(static_cast<std::uint32_t>(r));
    }
    while (!queue.empty()) {
        std::uint32_t r = queue.back();
        queue.pop_back();
        if (live[r] != 1)
            continue;
        std::uint32_t col = 0;
        for (std::uint32_t c : rows[r]) {
            if (!out.unit_mask_.test(c)) {
                col = c;
                break;
            }
        }
        out.unit_mask_.set(col);
        ++out.unit_count_;
        for (std::uint32_t i = col_start[col]; i < col_start[col + 1]; ++i) {
            std::uint32_t r2 = col_rows[i];
            if (--live[r2] == 1)
                queue.push_back(r2);
        }
    }

    std::vector<std::uint32_t> residual_rows;
    BitRow residual_mask(width);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (live[r] >= 2) {
            residual_rows.push_back(static_cast<std::uint32_t>(r));
            for (std::uint32_t c : rows[r])
                if (!out.unit_mask_.test(c))
                    residual_mask.set(c);
        }
    }
    out.residual_cols_ = residual_mask.set_bits();
    for (std::size_t i = 0; i < out.residual_cols_.size(); ++i)
        out.compact_of_[out.residual_cols_[i]] = static_cast<std::int32_t>(i);

    const std::size_t rc = out.residual_cols_.size();
    const std::size_t bound = std::min(rc, residual_rows.size());
    budget.require_bytes(bound * words_for(rc) * sizeof(Word) + width * sizeof(std::int32_t) * 2,
                         "dense residual elimination");

    out.residual_ = EchelonBasis(rc);
    std::vector<std::uint32_t> compact;
    for (std::uint32_t r : residual_rows) {
        compact.clear();
        for (std::uint32_t c : rows[r])
            if (!out.unit_mask_.test(c))
                compact.push_back(static_cast<std::uint32_t>(out.compact_of_[c]));
        out.residual_.insert(BitRow::from_indices(rc, compact));
    }
    out.residual_.canonicalize();
    return out;
}

EchelonBasis kernel_basis_sparse(std::span<const SparseRow> rows, std::size_t width, const Budget& budget)
{
    return echelonize_sparse(rows, width, budget).annihilator();
}

}  // namespace hitcalc::gf2
