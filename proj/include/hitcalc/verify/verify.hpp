#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "hitcalc/budget.hpp"
#include "hitcalc/homology/divided.hpp"
#include "hitcalc/lambda/lambda.hpp"
#include "hitcalc/report/report.hpp"
#include "hitcalc/steenrod/monomial.hpp"
#include "hitcalc/store/cache.hpp"

namespace hitcalc::verify {

// Shared settings for the drivers and the CLI.
struct Context {
    Budget budget;
    bool allow_heavy = false;
    std::optional<store::Cache> cache;
};

// Degrees whose monomial count exceeds this need allow_heavy.
inline constexpr std::size_t kHeavyMonomials = 200'000;

bool is_heavy(std::size_t n, unsigned d);
// Throws BudgetError for a heavy (n, d) without allow_heavy.
void require_allowed(std::size_t n, unsigned d, const Context& ctx);

// Primitive basis, read from and written to the cache when one is set.
std::shared_ptr<const homology::PrimitiveBasis> load_primitives(std::size_t n, unsigned d, const Context& ctx);
// Cohit representatives, cached the same way when the hit basis is small
// enough to store.
std::vector<Monomial> cohit_representatives(std::size_t n, unsigned d, const Context& ctx);

// Expected rank-4 coinvariant dimension in degree 2^{t+s+u} + 2^{t+s} + 2^t - 3.
struct Rank4Row {
    unsigned dimension = 0;
    std::optional<homology::ZetaFamily> family;  // generator when dimension is 1
};
Rank4Row rank4_expected(unsigned t, unsigned s, unsigned u);

// The displayed lambda word for the image of the generator.
lambda::LambdaWord displayed_image(homology::ZetaFamily family, unsigned t, unsigned s, unsigned u);

// 5(2^t - 1) + 50 . 2^t
unsigned rank5_degree(unsigned t);
// λ_0 λ_{2^{t+1}-1} λ_{2^{t+2}-1} λ_{2^{t+4}-1} λ_{2^{t+5}-1}, i.e. h_0h_{t+1}h_{t+2}h_{t+4}h_{t+5}.
lambda::LambdaWord rank5_product(unsigned t);

std::vector<report::VerdictReport> verify_thm21(unsigned t, unsigned s, unsigned u, const Context& ctx);
std::vector<report::VerdictReport> verify_cor22(unsigned t, unsigned s, unsigned u, const Context& ctx);
std::vector<report::VerdictReport> verify_thm23(unsigned t, const Context& ctx);
std::vector<report::VerdictReport> verify_cor24(unsigned t, const Context& ctx);

}  // namespace hitcalc::verify
