#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hitcalc/errors.hpp"
#include "hitcalc/gl/gl.hpp"
#include "hitcalc/hit/hit_space.hpp"
#include "hitcalc/homology/divided.hpp"
#include "hitcalc/lambda/lambda.hpp"
#include "hitcalc/report/report.hpp"
#include "hitcalc/steenrod/arithmetic.hpp"
#include "hitcalc/transfer/transfer.hpp"
#include "hitcalc/verify/verify.hpp"

using namespace hitcalc;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3 };

struct Options {
    bool json = false;
    bool csv = false;
    unsigned threads = 1;
    std::size_t budget_mb = 4096;
    bool allow_heavy = false;
    bool no_cache = false;
};

verify::Context make_context(const Options& o)
{
    verify::Context ctx;
    ctx.budget.threads = o.threads;
    ctx.budget.max_bytes = o.budget_mb << 20;
    ctx.allow_heavy = o.allow_heavy;
    if (!o.no_cache)
        ctx.cache = store::Cache::from_env();
    return ctx;
}

void print(const ordered_json& j)
{
    std::cout << j.dump(2) << "\n";
}

ordered_json strings(const auto& items)
{
    ordered_json arr = ordered_json::array();
    for (const auto& x : items)
        arr.push_back(x.to_string());
    return arr;
}

int emit_verdicts(const std::vector<report::VerdictReport>& reports, const Options& o)
{
    const auto format = o.json ? report::Format::Json : o.csv ? report::Format::Csv : report::Format::Text;
    std::cout << report::emit_report(reports, format);
    return report::all_pass(reports) ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hitcalc: hit problem, primitives, GL_n coinvariants, lambda algebra and the Singer transfer"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_flag("--json", o.json, "JSON output");
    app.add_flag("--csv", o.csv, "CSV output for verify reports");
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--budget-mb", o.budget_mb, "memory budget for dense linear algebra, MiB")->check(CLI::PositiveNumber);
    app.add_flag("--allow-heavy", o.allow_heavy, "permit degrees with more than 200000 monomials");
    app.add_flag("--no-cache", o.no_cache, "neither read nor write the basis cache");

    int result = kOk;

    std::uint64_t number = 0;
    auto* alpha_cmd = app.add_subcommand("alpha", "number of ones in the binary expansion");
    alpha_cmd->add_option("value", number)->required();
    alpha_cmd->callback([&] {
        if (o.json)
            print({{"value", number}, {"alpha", alpha(number)}});
        else
            std::cout << alpha(number) << "\n";
    });

    auto* mu_cmd = app.add_subcommand("mu", "least r with alpha(value + r) <= r");
    mu_cmd->add_option("value", number)->required();
    mu_cmd->callback([&] {
        if (o.json)
            print({{"value", number}, {"mu", mu(number)}});
        else
            std::cout << mu(number) << "\n";
    });

    std::size_t n = 0;
    unsigned d = 0;
    bool basis = false;
    auto add_nd = [&](CLI::App* cmd) {
        cmd->add_option("-n,--vars", n, "number of variables")->required()->check(CLI::Range(1, 8));
        cmd->add_option("-d,--degree", d, "degree")->required();
        cmd->add_flag("--basis", basis, "print a basis");
    };

    auto* cohit_cmd = app.add_subcommand("cohit", "dimension of the cohits Z/2 (x)_A P^d_n");
    add_nd(cohit_cmd);
    cohit_cmd->callback([&] {
        const auto ctx = make_context(o);
        const auto reps = verify::cohit_representatives(n, d, ctx);
        if (o.json) {
            ordered_json j{{"n", n}, {"d", d}, {"dimension", reps.size()}};
            if (basis)
                j["basis"] = strings(reps);
            print(j);
            return;
        }
        std::cout << "dimension " << reps.size() << "\n";
        if (basis)
            for (const Monomial& m : reps)
                std::cout << m.to_string() << "\n";
    });

    auto* prim_cmd = app.add_subcommand("primitives", "Steenrod-annihilated elements of H_d(V^n)");
    add_nd(prim_cmd);
    prim_cmd->callback([&] {
        const auto prims = verify::load_primitives(n, d, make_context(o));
        if (o.json) {
            ordered_json j{{"n", n}, {"d", d}, {"dimension", prims->dimension()}};
            if (basis)
                j["basis"] = strings(prims->elements());
            print(j);
            return;
        }
        std::cout << "dimension " << prims->dimension() << "\n";
        if (basis)
            for (const auto& xi : prims->elements())
                std::cout << xi.to_string() << "\n";
    });

    auto* inv_cmd = app.add_subcommand("invariants", "GL_n-invariants of the cohits");
    add_nd(inv_cmd);
    inv_cmd->callback([&] {
        const auto ctx = make_context(o);
        verify::require_allowed(n, d, ctx);
        const gl::InvariantBasis inv = gl::invariant_basis(n, d, ctx.budget);
        if (o.json) {
            ordered_json j{{"n", n}, {"d", d}, {"cohit_dimension", inv.cohit_dimension}, {"dimension", inv.dimension()}};
            if (basis)
                j["basis"] = strings(inv.classes);
            print(j);
            return;
        }
        std::cout << "dimension " << inv.dimension() << " (cohits " << inv.cohit_dimension << ")\n";
        if (basis)
            for (const Polynomial& p : inv.classes)
                std::cout << p.to_string() << "\n";
    });

    auto* coinv_cmd = app.add_subcommand("coinvariants", "Z/2 (x)_{GL_n} of the primitives");
    add_nd(coinv_cmd);
    coinv_cmd->callback([&] {
        const auto ctx = make_context(o);
        const auto co = gl::coinvariant_classes(verify::load_primitives(n, d, ctx), gl::generators(n));
        if (o.json) {
            ordered_json j{{"n", n}, {"d", d}, {"primitive_dimension", co.primitive_dimension()}, {"dimension", co.dimension()}};
            if (basis)
                j["basis"] = strings(co.class_representatives());
            print(j);
            return;
        }
        std::cout << "dimension " << co.dimension() << " (primitives " << co.primitive_dimension() << ")\n";
        if (basis)
            for (const auto& xi : co.class_representatives())
                std::cout << xi.to_string() << "\n";
    });

    auto* transfer_cmd = app.add_subcommand("transfer", "psi_n images of coinvariant representatives");
    add_nd(transfer_cmd);
    transfer_cmd->callback([&] {
        const auto ctx = make_context(o);
        const auto co = gl::coinvariant_classes(verify::load_primitives(n, d, ctx), gl::generators(n));
        lambda::LambdaAlgebra algebra(ctx.budget);
        const transfer::TransferReport tr = transfer::transfer_report(co, algebra);
        if (o.json) {
            ordered_json reps = ordered_json::array();
            for (const auto& r : tr.representatives)
                reps.push_back({{"d_element", r.element.to_string()},
                                {"lambda_element", r.image.to_string()},
                                {"cycle", r.cycle},
                                {"label", r.label ? ordered_json(*r.label) : ordered_json(nullptr)}});
            print({{"n", tr.n}, {"d", tr.d}, {"coinvariant_dimension", tr.coinvariant_dimension}, {"representatives", reps}});
        } else {
            std::cout << "dimension " << tr.coinvariant_dimension << "\n";
            for (const auto& r : tr.representatives)
                std::cout << r.element.to_string() << "  ->  " << r.image.to_string()
                          << (r.cycle ? "  [cycle]" : "  [NOT a cycle]") << (r.label ? "  = " + *r.label : "") << "\n";
        }
        if (!tr.all_cycles())
            result = kMismatch;
    });

    std::string element_text;
    auto* nf_cmd = app.add_subcommand("lambda-nf", "normal form of a lambda element such as 0,2 or 15,3,3,2+7,7,5,4");
    nf_cmd->add_option("element", element_text)->required();
    nf_cmd->callback([&] {
        const auto nf = lambda::LambdaAlgebra(make_context(o).budget).normal_form(lambda::LambdaElement::parse(element_text));
        if (o.json)
            print({{"input", element_text}, {"normal_form", nf.to_string()}});
        else
            std::cout << nf.to_string() << "\n";
    });

    auto* d_cmd = app.add_subcommand("lambda-d", "differential of a lambda element");
    d_cmd->add_option("element", element_text)->required();
    d_cmd->callback([&] {
        const auto de = lambda::LambdaAlgebra(make_context(o).budget).differential(lambda::LambdaElement::parse(element_text));
        if (o.json)
            print({{"input", element_text}, {"differential", de.to_string()}});
        else
            std::cout << de.to_string() << "\n";
    });

    std::size_t s_len = 0;
    unsigned w = 0;
    std::string class_text;
    auto* ext_cmd = app.add_subcommand("ext", "lambda homology in length s and weight w, i.e. Ext^{s,s+w}");
    ext_cmd->add_option("-s,--length", s_len)->required()->check(CLI::Range(0, 11));
    ext_cmd->add_option("-w,--weight", w)->required();
    ext_cmd->add_option("--class", class_text, "also test this element for being a cycle and a boundary");
    ext_cmd->callback([&] {
        lambda::LambdaAlgebra algebra(make_context(o).budget);
        const std::size_t dim = algebra.homology_dim(s_len, w);
        std::optional<lambda::LambdaElement> e;
        if (!class_text.empty()) {
            e = lambda::LambdaElement::parse(class_text);
            if (!e->is_zero() && (*e->length() != s_len || *e->weight() != w))
                throw DomainError("--class element is not in bidegree (" + std::to_string(s_len) + ", " +
                                  std::to_string(w) + ")");
        }
        if (o.json) {
            ordered_json j{{"s", s_len}, {"w", w}, {"words", algebra.bidegree_basis(s_len, w).size()}, {"dimension", dim}};
            if (e) {
                j["class"] = class_text;
                j["cycle"] = algebra.is_cycle(*e);
                j["boundary"] = algebra.is_boundary(*e);
            }
            print(j);
            return;
        }
        std::cout << "dimension " << dim << "\n";
        if (e)
            std::cout << "cycle " << (algebra.is_cycle(*e) ? "yes" : "no") << "\nboundary "
                      << (algebra.is_boundary(*e) ? "yes" : "no") << "\n";
    });

    auto* verify_cmd = app.add_subcommand("verify", "check a stated result at given parameters");
    verify_cmd->require_subcommand(1);
    unsigned t = 1, s = 1, u = 1;
    auto add_tsu = [&](CLI::App* cmd) {
        cmd->add_option("-t", t)->required()->check(CLI::Range(1, 20));
        cmd->add_option("-s", s)->required()->check(CLI::Range(1, 20));
        cmd->add_option("-u", u)->required()->check(CLI::Range(1, 20));
    };
    auto* v21 = verify_cmd->add_subcommand("thm21", "rank-4 coinvariants in degree 2^{t+s+u}+2^{t+s}+2^t-3");
    add_tsu(v21);
    v21->callback([&] { result = emit_verdicts(verify::verify_thm21(t, s, u, make_context(o)), o); });
    auto* v22 = verify_cmd->add_subcommand("cor22", "rank-4 transfer is an isomorphism in that degree");
    add_tsu(v22);
    v22->callback([&] { result = emit_verdicts(verify::verify_cor22(t, s, u, make_context(o)), o); });
    unsigned t5 = 0;
    auto* v23 = verify_cmd->add_subcommand("thm23", "rank-5 coinvariants vanish in degree 5(2^t-1)+50.2^t");
    v23->alias("thm22");
    v23->add_option("-t", t5)->required()->check(CLI::Range(0, 10));
    v23->callback([&] { result = emit_verdicts(verify::verify_thm23(t5, make_context(o)), o); });
    auto* v24 = verify_cmd->add_subcommand("cor24", "Ext^{5,5+d} vanishes in that degree");
    v24->add_option("-t", t5)->required()->check(CLI::Range(0, 10));
    v24->callback([&] { result = emit_verdicts(verify::verify_cor24(t5, make_context(o)), o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::bad_alloc&) {
        std::cerr << "budget exceeded: out of memory\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return result;
}
