#include "leibconf/fixtures.hpp"

namespace leibconf::fixtures {

namespace {

SesqMap rank1_bracket(const ConfModule& m, const Poly& coeff) {
    SesqMap br({m, m}, m);
    ModValue v(m, br.lambda_ctx());
    v.coeffs[0] = coeff;
    br.set_entry({0, 0}, std::move(v));
    return br;
}

}  // namespace

LeibnizConfAlg virasoro() {
    ConfModule m("vir", {"L"});
    VarCtx ctx = canon_lambdas(1);
    Poly c = Poly::partial(ctx) + lambda_var(ctx, 0).scaled(Rat(2));
    return raw_leibniz_alg(m, rank1_bracket(m, c));
}

LeibnizConfAlg mutant_weight3() {
    ConfModule m("vir3", {"L"});
    VarCtx ctx = canon_lambdas(1);
    Poly c = Poly::partial(ctx) + lambda_var(ctx, 0).scaled(Rat(3));
    return raw_leibniz_alg(m, rank1_bracket(m, c));
}

LeibnizConfAlg mutant_rank1_idempotent() {
    ConfModule m("idem", {"e"});
    VarCtx ctx = canon_lambdas(1);
    return raw_leibniz_alg(m, rank1_bracket(m, Poly::constant(ctx, Rat(1))));
}

std::vector<std::vector<std::vector<Rat>>> constants_nilpotent2() {
    std::vector c(2, std::vector(2, std::vector<Rat>(2, Rat(0))));
    c[0][0][1] = Rat(1);  // [a,a] = b
    return c;
}

std::vector<std::vector<std::vector<Rat>>> constants_affine2() {
    std::vector c(2, std::vector(2, std::vector<Rat>(2, Rat(0))));
    c[0][1][0] = Rat(1);   // [a,b] = a
    c[1][0][0] = Rat(-1);  // [b,a] = -a
    return c;
}

std::vector<std::vector<std::vector<Rat>>> constants_heisenberg3() {
    std::vector c(3, std::vector(3, std::vector<Rat>(3, Rat(0))));
    c[0][1][2] = Rat(1);   // [a,b] = c
    c[1][0][2] = Rat(-1);  // [b,a] = -c
    return c;
}

std::vector<std::vector<std::vector<Rat>>> constants_central3() {
    std::vector c(3, std::vector(3, std::vector<Rat>(3, Rat(0))));
    c[0][0][2] = c[0][1][2] = c[1][0][2] = c[1][1][2] = Rat(1);
    return c;
}

std::vector<std::vector<std::vector<Rat>>> constants_bad2() {
    std::vector c(2, std::vector(2, std::vector<Rat>(2, Rat(0))));
    c[0][0][0] = Rat(1);  // [a,a] = a
    return c;
}

LeibnizConfAlg current_nilpotent2() {
    return current_algebra(ConfModule("cur2", {"a", "b"}), constants_nilpotent2());
}

LeibnizConfAlg current_affine2() {
    return current_algebra(ConfModule("aff2", {"a", "b"}), constants_affine2());
}

LeibnizConfAlg current_heisenberg3() {
    return current_algebra(ConfModule("heis3", {"a", "b", "c"}), constants_heisenberg3());
}

LeibnizConfAlg current_central3() {
    return current_algebra(ConfModule("cen3", {"a", "b", "c"}), constants_central3());
}

LeibnizConfAlg mutant_current_bad2() {
    return current_algebra(ConfModule("bad2", {"a", "b"}), constants_bad2());
}

ConfRep virasoro_weight_module(int weight) {
    LeibnizConfAlg vir = virasoro();
    ConfModule m("wt" + std::to_string(weight), {"v"});
    SesqMap left({vir.mod, m}, m);
    VarCtx ctx = left.lambda_ctx();
    ModValue act(m, ctx);
    act.coeffs[0] = Poly::partial(ctx) + lambda_var(ctx, 0).scaled(Rat(weight));
    left.set_entry({0, 0}, std::move(act));
    SesqMap right({m, vir.mod}, m);
    return raw_rep(std::move(vir), std::move(m), std::move(left), std::move(right));
}

ConfRep virasoro_adjoint() { return adjoint_rep(virasoro()); }

LeibnizConfAlg semidirect_virasoro_weight1() {
    ConfRep r = virasoro_weight_module(1);
    return semidirect(r.alg, r.mod, r.left);
}

LeibnizConfAlg semidirect_affine2_module() {
    LeibnizConfAlg aff = current_affine2();
    ConfModule m("w", {"w"});
    SesqMap left({aff.mod, m}, m);
    VarCtx ctx = left.lambda_ctx();
    ModValue act(m, ctx);
    act.coeffs[0] = Poly::constant(ctx, Rat(1));
    left.set_entry({1, 0}, std::move(act));  // b.w = w, a.w = 0
    return semidirect(aff, m, left);
}

Cochain tau_fixture(const ConfRep& rep) {
    SesqMap t({rep.alg.mod, rep.alg.mod}, rep.mod);
    VarCtx ctx = t.lambda_ctx();
    ModValue v(rep.mod, ctx);
    v.coeffs[0] = Poly::partial(ctx) + lambda_var(ctx, 0).scaled(Rat(3));
    t.set_entry({0, 0}, std::move(v));
    return cochain_from_map(rep, std::move(t));
}

HomotopyOps morphism_kernel_tower() {
    LeibnizConfAlg g = current_central3();
    ConfModule ker("ker", {"k"});
    GradedModule mod("mker", {{0, g.mod}, {1, ker}});

    SesqMap incl({ker}, g.mod, -1);  // k -> a - b
    ModValue im(g.mod, VarCtx{});
    im.coeffs[0] = Poly::constant(VarCtx{}, Rat(1));
    im.coeffs[1] = Poly::constant(VarCtx{}, Rat(-1));
    incl.set_entry({0}, std::move(im));

    // the bracket of g preserves the kernel; both mixed actions vanish here
    std::map<int, SesqMap> ops;
    ops.emplace(1, lift_to_flat(mod, incl, {1}, 0, -1));
    ops.emplace(2, lift_to_flat(mod, g.bracket, {0, 0}, 0, 0));
    return make_homotopy_ops(HomotopyOps::Flavor::unshifted, std::move(mod), std::move(ops));
}

HomotopyOps skeletal_tower() {
    ConfRep rep = virasoro_weight_module(1);
    Cochain theta = coboundary(rep, tau_fixture(rep));
    GradedModule mod("skel", {{0, rep.alg.mod}, {1, rep.mod}});
    SesqMap rho2 = lift_to_flat(mod, rep.alg.bracket, {0, 0}, 0, 0);
    rho2 += lift_to_flat(mod, rep.left, {0, 1}, 1, 0);
    rho2 += lift_to_flat(mod, rep.right, {1, 0}, 1, 0);
    SesqMap rho3 = lift_to_flat(mod, *theta.map, {0, 0, 0}, 1, 1);
    std::map<int, SesqMap> ops;
    if (!rho2.is_zero()) ops.emplace(2, std::move(rho2));
    if (!rho3.is_zero()) ops.emplace(3, std::move(rho3));
    return make_homotopy_ops(HomotopyOps::Flavor::unshifted, std::move(mod), std::move(ops));
}

TwoTermAlg skeletal_fixture() {
    ConfRep rep = virasoro_weight_module(1);
    Cochain theta = coboundary(rep, tau_fixture(rep));
    return triple_to_skeletal(rep, theta);
}

CrossedModule nilpotent_crossed() {
    LeibnizConfAlg n = current_nilpotent2();
    return crossed_module(n, n, identity_linmap(n.mod), n.bracket, n.bracket);
}

TwoTermAlg strict_fixture() { return crossed_to_strict(nilpotent_crossed()); }

TwoTermAlg mixed_fixture() {
    TwoTermAlg a = strict_fixture();
    SesqMap tau({a.g0, a.g0}, a.g1);
    VarCtx ctx = tau.lambda_ctx();
    ModValue v(a.g1, ctx);
    v.coeffs[0] = lambda_var(ctx, 0);
    v.coeffs[1] = Poly::partial(ctx);
    tau.set_entry({0, 0}, std::move(v));
    ModValue w(a.g1, ctx);
    w.coeffs[1] = Poly::constant(ctx, Rat(2));
    tau.set_entry({1, 0}, std::move(w));
    return twist_by(a, tau);
}

std::vector<std::pair<std::string, LeibnizConfAlg>> algebra_zoo() {
    return {
        {"virasoro", virasoro()},
        {"current_nilpotent2", current_nilpotent2()},
        {"current_affine2", current_affine2()},
        {"current_heisenberg3", current_heisenberg3()},
        {"current_central3", current_central3()},
        {"semidirect_virasoro_weight1", semidirect_virasoro_weight1()},
        {"semidirect_affine2_module", semidirect_affine2_module()},
    };
}

std::vector<std::pair<std::string, LeibnizConfAlg>> mutant_zoo() {
    return {
        {"mutant_rank1_idempotent", mutant_rank1_idempotent()},
        {"mutant_current_bad2", mutant_current_bad2()},
        {"mutant_weight3", mutant_weight3()},
    };
}

}  // namespace leibconf::fixtures
