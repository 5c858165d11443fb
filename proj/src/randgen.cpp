#include "leibconf/randgen.hpp"

#include "leibconf/fixtures.hpp"

namespace leibconf {

Rat random_rat(Rng& rng, int num_range, int den_choices) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_choices);
    return Rat(num(rng), den(rng));
}

Poly random_poly(Rng& rng, const VarCtx& ctx, int max_ddeg, int max_ldeg, int nterms) {
    Poly p(ctx);
    std::uniform_int_distribution<int> ddeg(0, max_ddeg);
    std::uniform_int_distribution<int> ldeg(0, max_ldeg);
    for (int t = 0; t < nterms; ++t) {
        Exp e(ctx.nvars(), 0);
        e[0] = ddeg(rng);
        if (ctx.nlambdas() > 0) {
            int total = ldeg(rng);
            std::uniform_int_distribution<int> pick(1, ctx.nlambdas());
            for (int i = 0; i < total; ++i) e[pick(rng)]++;
        }
        p += Poly::monomial(ctx, std::move(e), random_rat(rng));
    }
    return p;
}

ModValue random_value(Rng& rng, const ConfModule& m, const VarCtx& ctx, int max_ddeg,
                      int max_ldeg, int nterms) {
    ModValue v(m, ctx);
    for (int i = 0; i < m.rank(); ++i) v.coeffs[i] = random_poly(rng, ctx, max_ddeg, max_ldeg, nterms);
    return v;
}

SesqMap random_sesq(Rng& rng, std::vector<ConfModule> sources, ConfModule target, int max_ddeg,
                    int max_ldeg, int degree) {
    SesqMap map(std::move(sources), std::move(target), degree);
    const VarCtx ctx = map.lambda_ctx();
    for (const auto& tuple : all_tuples(map.sources))
        map.set_entry(tuple, random_value(rng, map.target, ctx, max_ddeg, max_ldeg));
    return map;
}

Cochain random_cochain(Rng& rng, const ConfRep& rep, int degree, int max_ddeg, int max_ldeg) {
    if (degree == 0) {
        std::vector<Rat> v;
        for (int i = 0; i < rep.mod.rank(); ++i) v.push_back(random_rat(rng));
        return c0_cochain(rep, std::move(v));
    }
    std::vector<ConfModule> srcs(degree, rep.alg.mod);
    return cochain_from_map(rep, random_sesq(rng, srcs, rep.mod, max_ddeg, max_ldeg));
}

SesqMap random_graded_map(Rng& rng, const GradedModule& mod, int arity, int degree, int max_ddeg,
                          int max_ldeg) {
    std::vector<ConfModule> srcs(arity, mod.flat);
    SesqMap map(std::move(srcs), mod.flat, degree);
    const VarCtx ctx = map.lambda_ctx();
    for (const auto& tuple : all_tuples(map.sources)) {
        int t = degree;
        for (int i : tuple) t += mod.degree_of[i];
        auto comp = mod.components.find(t);
        if (comp == mod.components.end()) continue;
        const int off = mod.offset_of(t);
        ModValue v(mod.flat, ctx);
        for (int j = 0; j < comp->second.rank(); ++j)
            v.coeffs[off + j] = random_poly(rng, ctx, max_ddeg, max_ldeg, 2);
        map.set_entry(tuple, std::move(v));
    }
    return map;
}

HomotopyOps random_tower(Rng& rng, const GradedModule& mod, int max_arity, int max_ddeg,
                         int max_ldeg) {
    std::map<int, SesqMap> ops;
    for (int k = 1; k <= max_arity; ++k) {
        SesqMap m = random_graded_map(rng, mod, k, k - 2, max_ddeg, max_ldeg);
        if (!m.is_zero()) ops.emplace(k, std::move(m));
    }
    return make_homotopy_ops(HomotopyOps::Flavor::unshifted, mod, std::move(ops));
}

ConvElem random_conv_elem(Rng& rng, const GradedModule& mod, int degree, int min_arity,
                          int max_arity, int max_ddeg, int max_ldeg) {
    std::map<int, SesqMap> pieces;
    for (int k = min_arity; k <= max_arity; ++k) {
        SesqMap m = random_graded_map(rng, mod, k, degree, max_ddeg, max_ldeg);
        if (!m.is_zero()) pieces.emplace(k, std::move(m));
    }
    return make_conv_elem(mod, degree, std::move(pieces));
}

SesqMap random_tau(Rng& rng, const TwoTermAlg& a, int max_ddeg, int max_ldeg) {
    return random_sesq(rng, {a.g0, a.g0}, a.g1, max_ddeg, max_ldeg);
}

TwoTermAlg random_two_term_valid(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    TwoTermAlg base = [&] {
        switch (pick(rng)) {
            case 0: {
                ConfRep rep = fixtures::virasoro_weight_module(1);
                Cochain theta = coboundary(rep, random_cochain(rng, rep, 2, 1, 1));
                return triple_to_skeletal(rep, theta);
            }
            case 1: {
                ConfRep rep = adjoint_rep(fixtures::current_nilpotent2());
                Cochain theta = coboundary(rep, random_cochain(rng, rep, 2, 1, 1));
                return triple_to_skeletal(rep, theta);
            }
            case 2:
                return fixtures::strict_fixture();
            default:
                return fixtures::mixed_fixture();
        }
    }();
    std::uniform_int_distribution<int> coin(0, 1);
    if (coin(rng)) return twist_by(base, random_tau(rng, base, 1, 1));
    return base;
}

TwoTermAlg random_two_term_any(Rng& rng) {
    ConfModule g0("r0", {"x", "y"});
    ConfModule g1("r1", {"u"});
    return two_term(g0, g1, random_sesq(rng, {g1}, g0, 1, 0),
                    random_sesq(rng, {g0, g0}, g0, 1, 1), random_sesq(rng, {g0, g1}, g1, 1, 1),
                    random_sesq(rng, {g1, g0}, g1, 1, 1),
                    random_sesq(rng, {g0, g0, g0}, g1, 1, 1));
}

TwoTermAlg perturb_ternary(Rng& rng, TwoTermAlg a) {
    if (a.g0.rank() == 0 || a.g1.rank() == 0) return a;
    std::uniform_int_distribution<int> g0pick(0, a.g0.rank() - 1);
    std::uniform_int_distribution<int> g1pick(0, a.g1.rank() - 1);
    std::vector<int> tuple{g0pick(rng), g0pick(rng), g0pick(rng)};
    ModValue v = a.r3.entry_or_zero(tuple);
    v.coeffs[g1pick(rng)] += random_poly(rng, v.ctx, 1, 1, 1) + Poly::constant(v.ctx, Rat(1));
    a.r3.set_entry(tuple, std::move(v));
    return a;
}

}  // namespace leibconf
