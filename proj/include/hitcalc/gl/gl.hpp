#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/budget.hpp"
#include "hitcalc/gf2/echelon.hpp"
#include "hitcalc/hit/hit_space.hpp"
#include "hitcalc/homology/divided.hpp"

namespace hitcalc::gl {

// An invertible n x n matrix over F2. Entry (i, j) is bit j of row i; the
// matrix acts on cohomology by u_j -> sum_i g_ij u_i.
class GLMatrix {
public:
    // Throws DomainError if the matrix is singular or n is out of range.
    GLMatrix(std::size_t n, std::vector<std::uint32_t> rows);
    static GLMatrix identity(std::size_t n);
    // `10;11`: rows of bits separated by semicolons.
    static GLMatrix parse(std::string_view text);

    std::size_t size() const { return n_; }
    bool at(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
    const std::vector<std::uint32_t>& rows() const { return rows_; }

    GLMatrix operator*(const GLMatrix& other) const;
    GLMatrix inverse() const;
    std::string to_string() const;

    friend bool operator==(const GLMatrix&, const GLMatrix&) = default;
    friend auto operator<=>(const GLMatrix&, const GLMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> rows_;
};

// Adjacent transpositions u_i <-> u_{i+1} followed by the transvection
// u_1 -> u_1 + u_2. Empty for n = 1. Generates GL_n(F2).
std::vector<GLMatrix> generators(std::size_t n);

// Every element of the group generated by `gens` (breadth-first closure).
std::vector<GLMatrix> group_closure(std::size_t n, const std::vector<GLMatrix>& gens);

// Algebra substitution u_j -> sum_i g_ij u_i.
Polynomial act_poly(const GLMatrix& g, const Polynomial& p);

// The contragredient action on homology, characterised by
// pair(act_homology(g, xi), f) = pair(xi, act_poly(g^{-1}, f)). Computed as
// the divided-power algebra map a_k -> sum_j (g^{-1})_kj a_j.
homology::DElement act_homology(const GLMatrix& g, const homology::DElement& xi);

// Fixed subspace of the generators acting on the cohits Q^d_n.
struct InvariantBasis {
    std::size_t n = 0;
    unsigned d = 0;
    std::size_t cohit_dimension = 0;
    // Canonical echelon basis in cohit-representative coordinates.
    std::vector<gf2::BitRow> coordinates;
    // The same classes as sums of representative monomials.
    std::vector<Polynomial> classes;

    std::size_t dimension() const { return coordinates.size(); }
};

InvariantBasis invariant_basis(const hit::CohitBasis& cohits, const Budget& budget = {});
InvariantBasis invariant_basis(std::size_t n, unsigned d, const Budget& budget = {});

// The coinvariants Z/2 (x)_{GL_n} P_A H_d: primitives modulo the span of
// g.v + v over generators g and primitive basis vectors v.
class CoinvariantReport {
public:
    CoinvariantReport(std::shared_ptr<const homology::PrimitiveBasis> primitives, gf2::EchelonBasis relations);

    std::size_t vars() const { return primitives_->vars(); }
    unsigned degree() const { return primitives_->degree(); }
    std::size_t primitive_dimension() const { return primitives_->dimension(); }
    std::size_t relations_rank() const { return relations_.rank(); }
    std::size_t dimension() const { return primitive_dimension() - relations_rank(); }
    const std::vector<homology::DElement>& class_representatives() const { return representatives_; }
    const homology::PrimitiveBasis& primitives() const { return *primitives_; }
    const gf2::EchelonBasis& relations() const { return relations_; }

    // Class of a primitive in primitive-basis coordinates, reduced modulo
    // the relations. Throws DomainError for non-primitive input.
    gf2::BitRow class_of(const homology::DElement& xi) const;
    bool is_nonzero_class(const homology::DElement& xi) const { return !class_of(xi).is_zero(); }

private:
    std::shared_ptr<const homology::PrimitiveBasis> primitives_;
    gf2::EchelonBasis relations_;
    std::vector<homology::DElement> representatives_;
};

CoinvariantReport coinvariant_classes(std::shared_ptr<const homology::PrimitiveBasis> primitives,
                                      const std::vector<GLMatrix>& gens);
CoinvariantReport coinvariant_classes(std::size_t n, unsigned d, const Budget& budget = {});

}  // namespace hitcalc::gl
