#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hitcalc/budget.hpp"
#include "hitcalc/gf2/bitrow.hpp"

namespace hitcalc::gf2 {

// Reduced row echelon form of a subspace of F2^ambient_length. The pivot of a
// row is its first set coordinate; every pivot column is zero in all other
// rows. Rows are exposed in increasing pivot order, which makes the basis a
// canonical function of its span.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ambient_length = 0);

    // Adopts rows that are already in canonical form; validates that claim.
    static EchelonBasis from_canonical_rows(std::size_t ambient_length, std::vector<BitRow> rows);

    std::size_t ambient_length() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitRow>& rows() const;
    const std::vector<std::uint32_t>& pivots() const;
    bool is_pivot(std::size_t column) const { return pivot_mask_.test(column); }
    const BitRow& pivot_mask() const { return pivot_mask_; }

    // Residual of v modulo the span, zero in every pivot column.
    BitRow reduce(BitRow v) const;
    bool contains(const BitRow& v) const { return reduce(v).is_zero(); }

    // Adds v to the span in place; true iff the rank grew.
    bool insert(BitRow v);

    // Puts rows in pivot order. insert() leaves them in arrival order until
    // the next call to an accessor or to this.
    void canonicalize() const;

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b);

private:
    void require_length(const BitRow& v) const;

    std::size_t ambient_ = 0;
    mutable std::vector<BitRow> rows_;
    mutable std::vector<std::uint32_t> pivots_;
    mutable std::vector<std::int32_t> row_of_pivot_;
    mutable bool sorted_ = true;
    BitRow pivot_mask_;
};

// Free-function forms of the basis operations.
BitRow reduce_against(const BitRow& v, const EchelonBasis& b);
std::pair<EchelonBasis, bool> insert(EchelonBasis b, const BitRow& v);

// Reduced basis of {x : row . x = 0 for every row}.
EchelonBasis kernel_basis(std::span<const BitRow> rows, std::size_t width);

// Non-pivot coordinates in increasing order; their unit vectors project to a
// basis of F2^ambient / span(b).
std::vector<std::uint32_t> quotient_representatives(std::size_t ambient_coords, const EchelonBasis& b);

// Sorted, duplicate-free list of the set coordinates of a row.
using SparseRow = std::vector<std::uint32_t>;

// Echelon form of a large sparse row set, split into the coordinates whose
// unit vectors lie in the span (found by iterated singleton elimination) and
// a dense reduced basis over the remaining live coordinates. The canonical
// basis of the whole span is {e_c : c unit} together with the lifted
// residual rows; materialize() builds it.
class PeeledEchelon {
public:
    PeeledEchelon() = default;

    std::size_t width() const { return width_; }
    std::size_t rank() const { return unit_count_ + residual_.rank(); }
    std::size_t unit_count() const { return unit_count_; }
    const std::vector<std::uint32_t>& residual_columns() const { return residual_cols_; }
    const EchelonBasis& residual() const { return residual_; }

    bool is_pivot(std::size_t column) const;
    std::vector<std::uint32_t> pivot_columns() const;
    std::vector<std::uint32_t> non_pivot_columns() const;

    BitRow reduce(BitRow v) const;
    bool contains(const BitRow& v) const { return reduce(v).is_zero(); }

    EchelonBasis materialize() const;

    // Canonical basis of the annihilator {x : x . r = 0 for r in span}.
    EchelonBasis annihilator() const;

    friend PeeledEchelon echelonize_sparse(std::span<const SparseRow> rows, std::size_t width, const Budget& budget);

private:
    std::size_t width_ = 0;
    std::size_t unit_count_ = 0;
    BitRow unit_mask_;
    std::vector<std::uint32_t> residual_cols_;
    std::vector<std::int32_t> compact_of_;
    EchelonBasis residual_;
};

PeeledEchelon echelonize_sparse(std::span<const SparseRow> rows, std::size_t width, const Budget& budget = {});

// kernel_basis for sparse input, through the peeled elimination.
EchelonBasis kernel_basis_sparse(std::span<const SparseRow> rows, std::size_t width, const Budget& budget = {});

}  // namespace hitcalc::gf2
