#include <doctest.h>

#include "leibconf/fixtures.hpp"
#include "leibconf/randgen.hpp"

using namespace leibconf;
using namespace leibconf::fixtures;

namespace {

GradedModule two_line_module() {
    return GradedModule("gm", {{0, ConfModule("c0", {"x", "y"})}, {1, ConfModule("c1", {"u"})}});
}

HomotopyOps perturbed_skeletal() {
    HomotopyOps ops = skeletal_tower();
    // push a non-cocycle into the arity-3 table: rho3(L,L,L) += l1 * v
    SesqMap& rho3 = ops.ops.at(3);
    ModValue v = rho3.entry_or_zero({0, 0, 0});
    v.coeffs[1] += lambda_var(v.ctx, 0);
    rho3.set_entry({0, 0, 0}, std::move(v));
    return ops;
}

HomotopyOps perturbed_kernel() {
    HomotopyOps ops = morphism_kernel_tower();
    SesqMap& rho2 = ops.ops.at(2);
    ModValue v = rho2.entry_or_zero({0, 0});
    v.coeffs[2] = v.coeffs[2].scaled(Rat(2));  // [a,a] = 2c breaks the chain rule
    rho2.set_entry({0, 0}, std::move(v));
    return ops;
}

}  // namespace

TEST_CASE("shuffle enumeration") {
    auto s11 = enumerate_shuffles(1, 1);
    REQUIRE(s11.size() == 2);
    CHECK(s11[0].images == std::vector<int>{0, 1});
    CHECK(s11[0].sgn == 1);
    CHECK(s11[1].images == std::vector<int>{1, 0});
    CHECK(s11[1].sgn == -1);

    for (int q = 0; q <= 4; ++q) CHECK(enumerate_shuffles(0, q).size() == 1);
    CHECK(enumerate_shuffles(2, 1).size() == 3);
    CHECK(enumerate_shuffles(3, 2).size() == 10);
    for (const auto& sh : enumerate_shuffles(3, 2)) {
        CHECK(std::is_sorted(sh.images.begin(), sh.images.begin() + 3));
        CHECK(std::is_sorted(sh.images.begin() + 3, sh.images.end()));
    }
}

TEST_CASE("koszul signs") {
    CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == 1);
    CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
    CHECK(koszul_sign({1, 0}, {0, 1}) == 1);

    // cocycle property: eps(sigma tau; d) = eps(sigma; d) eps(tau; d о sigma)
    Rng rng(71);
    std::uniform_int_distribution<int> deg(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 5;
        std::vector<int> sigma(n), tau(n), degrees(n);
        for (int i = 0; i < n; ++i) sigma[i] = tau[i] = i;
        std::shuffle(sigma.begin(), sigma.end(), rng);
        std::shuffle(tau.begin(), tau.end(), rng);
        for (int i = 0; i < n; ++i) degrees[i] = deg(rng);
        std::vector<int> comp(n), permuted(n);
        for (int i = 0; i < n; ++i) comp[i] = sigma[tau[i]];
        for (int i = 0; i < n; ++i) permuted[i] = degrees[sigma[i]];
        CHECK(koszul_sign(comp, degrees) ==
              koszul_sign(sigma, degrees) * koszul_sign(tau, permuted));
    }
}

TEST_CASE("level 1 identity is the square of the differential") {
    GradedModule mod("m3", {{0, ConfModule("a0", {"x"})},
                            {1, ConfModule("a1", {"u"})},
                            {2, ConfModule("a2", {"w"})}});
    SesqMap d({mod.flat}, mod.flat, -1);
    d.set_entry({2}, ModValue::basis_unit(mod.flat, 1, VarCtx{}));  // w -> u
    d.set_entry({1}, ModValue::basis_unit(mod.flat, 0, VarCtx{}));  // u -> x
    HomotopyOps bad = make_homotopy_ops(HomotopyOps::Flavor::unshifted, mod, {{1, d}});
    CHECK_FALSE(leibnizator_sum(bad, 1, {2}).is_zero());
    CHECK_FALSE(verify_leib_infty(bad, 1).pass());

    SesqMap d2({mod.flat}, mod.flat, -1);
    d2.set_entry({2}, ModValue::basis_unit(mod.flat, 1, VarCtx{}));
    HomotopyOps good = make_homotopy_ops(HomotopyOps::Flavor::unshifted, mod, {{1, d2}});
    CHECK(verify_leib_infty(good, 4).pass());
}

TEST_CASE("level 2 identity vanishes when the differential does") {
    Rng rng(73);
    GradedModule mod = two_line_module();
    for (int trial = 0; trial < 5; ++trial) {
        SesqMap rho2 = random_graded_map(rng, mod, 2, 0, 2, 2);
        HomotopyOps ops =
            make_homotopy_ops(HomotopyOps::Flavor::unshifted, mod, {{2, rho2}});
        for (const auto& tuple : all_tuples({mod.flat, mod.flat}))
            CHECK(leibnizator_sum(ops, 2, tuple).is_zero());
    }
}

TEST_CASE("level 3 identity is the conformal Leibniz defect in degree 0") {
    for (const auto& [name, alg] : mutant_zoo()) {
        CAPTURE(name);
        HomotopyOps ops = degree0_tower(alg.mod, alg.bracket);
        const VarCtx ctx = canon_lambdas(2);
        const Poly L1 = lambda_var(ctx, 0), L2 = lambda_var(ctx, 1);
        const SesqMap& br = alg.bracket;
        for (const auto& tuple : all_tuples({alg.mod, alg.mod, alg.mod})) {
            auto unit = [&](int b) { return ModValue::basis_unit(alg.mod, b, ctx); };
            ModValue defect =
                eval(br, {unit(tuple[0]), eval_basis(br, {tuple[1], tuple[2]}, {L2}, ctx)}, {L1},
                     ctx) -
                eval(br, {eval_basis(br, {tuple[0], tuple[1]}, {L1}, ctx), unit(tuple[2])},
                     {L1 + L2}, ctx) -
                eval(br, {unit(tuple[1]), eval_basis(br, {tuple[0], tuple[2]}, {L1}, ctx)}, {L2},
                     ctx);
            CHECK(leibnizator_sum(ops, 3, tuple) == -defect);
        }
    }
}

TEST_CASE("towers built from the zoo satisfy all identities") {
    for (const auto& [name, alg] : algebra_zoo()) {
        CAPTURE(name);
        CHECK(verify_leib_infty(degree0_tower(alg.mod, alg.bracket), 4).pass());
    }
    CHECK(verify_leib_infty(morphism_kernel_tower(), 4).pass());
    CHECK(verify_leib_infty(skeletal_tower(), 4).pass());
}

TEST_CASE("a perturbed arity-3 table fails exactly at level 4") {
    HomotopyOps bad = perturbed_skeletal();
    CheckReport r = verify_leib_infty(bad, 4);
    REQUIRE_FALSE(r.pass());
    for (const auto& f : r.failures) CHECK(f.where[0] == "n=4");
    CHECK(verify_leib_infty(bad, 3).pass());
}

TEST_CASE("suspension fixes tables concentrated in degree 0") {
    LeibnizConfAlg vir = virasoro();
    HomotopyOps ops = degree0_tower(vir.mod, vir.bracket);
    HomotopyOps up = shift(ops);
    CHECK(up.flavor == HomotopyOps::Flavor::shifted);
    REQUIRE(up.ops.count(2) == 1);
    // arity 2 on degree-1 inputs: (-1)^{1 + |h1|} = +1
    CHECK(up.ops.at(2).table == vir.bracket.table);
    CHECK(up.mod.degree_of == std::vector<int>{1});
}

TEST_CASE("suspension round trip is the identity") {
    Rng rng(79);
    GradedModule mod = two_line_module();
    for (int trial = 0; trial < 30; ++trial) {
        HomotopyOps ops = random_tower(rng, mod, 4, 2, 2);
        CHECK(unshift(shift(ops)) == ops);
    }
    HomotopyOps mk = morphism_kernel_tower();
    CHECK(unshift(shift(mk)) == mk);
}

TEST_CASE("maurer-cartan agrees with the structure identities") {
    std::vector<std::pair<std::string, HomotopyOps>> samples;
    for (const auto& [name, alg] : algebra_zoo())
        samples.push_back({name, degree0_tower(alg.mod, alg.bracket)});
    for (const auto& [name, alg] : mutant_zoo())
        samples.push_back({name, degree0_tower(alg.mod, alg.bracket)});
    samples.push_back({"morphism_kernel", morphism_kernel_tower()});
    samples.push_back({"skeletal", skeletal_tower()});
    samples.push_back({"perturbed_skeletal", perturbed_skeletal()});
    samples.push_back({"perturbed_kernel", perturbed_kernel()});
    Rng rng(83);
    GradedModule mod = two_line_module();
    for (int trial = 0; trial < 10; ++trial)
        samples.push_back({"random" + std::to_string(trial), random_tower(rng, mod, 3, 1, 1)});

    int good = 0, bad = 0;
    for (const auto& [name, ops] : samples) {
        CAPTURE(name);
        const bool direct = verify_leib_infty(ops, 4).pass();
        (direct ? good : bad)++;
        CHECK(is_maurer_cartan(shift(ops), 4) == direct);
    }
    CHECK(good >= 9);
    CHECK(bad >= 4);

    HomotopyOps zero =
        make_homotopy_ops(HomotopyOps::Flavor::shifted, mod.suspended(1), {});
    CHECK(is_maurer_cartan(zero, 4));
}

TEST_CASE("the self-bracket of an odd element doubles its self-composition") {
    Rng rng(87);
    GradedModule up = two_line_module().suspended(1);
    for (int trial = 0; trial < 4; ++trial) {
        ConvElem a = random_conv_elem(rng, up, -1, 1, 2, 1, 1);
        CHECK(gla_bracket(a, a) == conv_scaled(diamond(a, a), Rat(2)));
    }
}

TEST_CASE("bracket antisymmetry and graded Jacobi") {
    Rng rng(89);
    GradedModule mod = two_line_module();
    GradedModule up = mod.suspended(1);
    for (int trial = 0; trial < 6; ++trial) {
        ConvElem a = random_conv_elem(rng, up, -1, 1, 2, 1, 1);
        ConvElem b = random_conv_elem(rng, up, 0, 1, 2, 1, 1);
        ConvElem c = random_conv_elem(rng, up, 1, 1, 2, 1, 1);

        auto anti = [&](const ConvElem& u, const ConvElem& v) {
            ConvElem lhs = gla_bracket(u, v);
            ConvElem rhs = conv_scaled(gla_bracket(v, u),
                                       Rat(-sign_pow(static_cast<long long>(u.degree) * v.degree)));
            CHECK(lhs == rhs);
        };
        anti(a, b);
        anti(a, c);
        anti(b, c);

        auto jac = [&](const ConvElem& u, const ConvElem& v, const ConvElem& w) {
            ConvElem lhs = gla_bracket(u, gla_bracket(v, w));
            ConvElem r1 = gla_bracket(gla_bracket(u, v), w);
            ConvElem r2 = conv_scaled(gla_bracket(v, gla_bracket(u, w)),
                                      Rat(sign_pow(static_cast<long long>(u.degree) * v.degree)));
            CHECK(lhs == conv_add(r1, r2));
        };
        jac(a, b, c);
        jac(a, a, b);
        jac(c, b, a);
    }
}

TEST_CASE("homotopy coboundary squares to zero over maurer-cartan towers") {
    Rng rng(97);
    std::vector<HomotopyOps> mcs{shift(degree0_tower(virasoro().mod, virasoro().bracket)),
                                 shift(morphism_kernel_tower()), shift(skeletal_tower())};
    for (const auto& rho : mcs) {
        for (int n = 1; n <= 3; ++n) {
            ConvElem phi = random_conv_elem(rng, rho.mod, 1 - n, 1, 3, 1, 1);
            ConvElem once = linfty_coboundary(rho, phi);
            CHECK(once.degree == -n);
            CHECK(linfty_coboundary(rho, once).is_zero());
        }
    }

    // zero structure gives the zero coboundary
    GradedModule up = two_line_module().suspended(1);
    HomotopyOps zero = make_homotopy_ops(HomotopyOps::Flavor::shifted, up, {});
    ConvElem phi = random_conv_elem(rng, up, 0, 1, 2, 1, 1);
    CHECK(linfty_coboundary(zero, phi).is_zero());
}

TEST_CASE("degree-0 concentration reproduces the classical coboundary") {
    Rng rng(101);
    for (const auto& alg : {virasoro(), current_central3(), current_affine2()}) {
        ConfRep adj = adjoint_rep(alg);
        HomotopyOps rho = shift(degree0_tower(alg.mod, alg.bracket));
        for (int n = 1; n <= 3; ++n) {
            for (int trial = 0; trial < 4; ++trial) {
                Cochain phi = random_cochain(rng, adj, n, 2, 1);
                ConvElem lifted =
                    make_conv_elem(rho.mod, 1 - n, {{n, with_degree(*phi.map, 1 - n)}});
                ConvElem dphi = linfty_coboundary(rho, lifted);
                Cochain classical = coboundary(adj, phi);
                SesqMap expect = with_degree(*classical.map, -n);
                if (dphi.pieces.empty()) {
                    CHECK(expect.is_zero());
                } else {
                    REQUIRE(dphi.pieces.count(n + 1) == 1);
                    // recorded sign table: +1 in every degree
                    CHECK(dphi.pieces.at(n + 1) == expect);
                }
            }
        }
    }
}
