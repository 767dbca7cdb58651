#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hitcalc/budget.hpp"
#include "hitcalc/gl/gl.hpp"
#include "hitcalc/homology/divided.hpp"
#include "hitcalc/lambda/lambda.hpp"

namespace hitcalc::transfer {

// Which variable the recursion peels and which side the new λ goes on.
// PeelFirst writes ξ = sum a_1^{(i)} z and sets
//   ψ_n(ξ) = sum_t λ_{i+t} ψ_{n-1}((Sq^t)_* z),
// PeelLast mirrors it with a_n and right multiplication. PeelFirst matches
// the rewriting orientation of the lambda module.
enum class Orientation { PeelFirst, PeelLast };

lambda::LambdaElement psi(const homology::DElement& xi, Orientation orientation = Orientation::PeelFirst,
                          lambda::LambdaAlgebra& algebra = lambda::default_algebra());

// A named Ext class and a word representing it.
struct Label {
    std::string name;
    lambda::LambdaWord word;
};

// h_j <-> λ_{2^j - 1} and c_t <-> λ_{2^{t+2}-1} λ_{2^{t+2}-1} λ_{2^{t+1}+2^t-1}.
// Products h_{j_1} ... h_{j_r} (j nondecreasing), optionally followed by one
// c_t, of the given length and weight; ordered by name.
std::vector<Label> labels(std::size_t length, unsigned weight);

// First label whose word is a nonzero class equal to [e].
std::optional<std::string> match_label(const lambda::LambdaElement& e,
                                       lambda::LambdaAlgebra& algebra = lambda::default_algebra());

struct Representative {
    homology::DElement element;
    lambda::LambdaElement image;
    bool cycle = false;
    std::optional<std::string> label;
};

struct TransferReport {
    std::size_t n = 0;
    unsigned d = 0;
    std::size_t coinvariant_dimension = 0;
    std::vector<Representative> representatives;

    bool all_cycles() const;
};

TransferReport transfer_report(const gl::CoinvariantReport& coinvariants,
                               lambda::LambdaAlgebra& algebra = lambda::default_algebra());
TransferReport transfer_report(std::size_t n, unsigned d, const Budget& budget = {});

}  // namespace hitcalc::transfer
