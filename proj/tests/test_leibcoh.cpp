#include <doctest.h>

#include "leibconf/fixtures.hpp"
#include "leibconf/randgen.hpp"

using namespace leibconf;
using namespace leibconf::fixtures;

namespace {

// independent oracle: the left Leibniz identity on scalar structure
// constants, checked coordinatewise without any polynomial machinery
bool scalar_leibniz_ok(const std::vector<std::vector<std::vector<Rat>>>& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int t = 0; t < n; ++t) {
                    Rat lhs(0), mid(0), rhs(0);
                    for (int p = 0; p < n; ++p) {
                        lhs += c[j][k][p] * c[i][p][t];
                        mid += c[i][j][p] * c[p][k][t];
                        rhs += c[i][k][p] * c[j][p][t];
                    }
                    if (lhs != mid + rhs) return false;
                }
    return true;
}

ConfRep abelian_trivial_rep() {
    ConfModule g("ab", {"x", "y"});
    ConfModule m("m", {"u"});
    LeibnizConfAlg alg = raw_leibniz_alg(g, SesqMap({g, g}, g));
    return raw_rep(alg, m, SesqMap({g, m}, m), SesqMap({m, g}, m));
}

}  // namespace

TEST_CASE("the zoo satisfies the conformal Leibniz identity") {
    for (const auto& [name, alg] : algebra_zoo()) {
        CAPTURE(name);
        CHECK(verify_leibniz(alg.mod, alg.bracket).pass());
    }
}

TEST_CASE("mutant structures fail with nonzero residuals") {
    for (const auto& [name, alg] : mutant_zoo()) {
        CAPTURE(name);
        CheckReport r = verify_leibniz(alg.mod, alg.bracket);
        CHECK_FALSE(r.pass());
        for (const auto& f : r.failures) CHECK(f.residual != "0");
    }

    CheckReport r = verify_leibniz(mutant_rank1_idempotent().mod, mutant_rank1_idempotent().bracket);
    REQUIRE(r.failures.size() == 1);
    CHECK(r.failures[0].where == std::vector<std::string>{"e", "e", "e"});
    CHECK(r.failures[0].residual == "(-1) e");  // lhs e minus rhs 2e
}

TEST_CASE("current algebras agree with the scalar oracle") {
    struct Entry {
        std::string name;
        std::vector<std::vector<std::vector<Rat>>> c;
    };
    std::vector<Entry> entries = {{"nilpotent2", constants_nilpotent2()},
                                  {"affine2", constants_affine2()},
                                  {"heisenberg3", constants_heisenberg3()},
                                  {"central3", constants_central3()},
                                  {"bad2", constants_bad2()}};
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector c(2, std::vector(2, std::vector<Rat>(2, Rat(0))));
        for (auto& a : c)
            for (auto& b : a)
                for (auto& x : b) x = random_rat(rng, 1, 1);
        entries.push_back({"random" + std::to_string(trial), std::move(c)});
    }
    int satisfied = 0, violated = 0;
    for (const auto& e : entries) {
        CAPTURE(e.name);
        std::vector<std::string> basis;
        for (size_t i = 0; i < e.c.size(); ++i) basis.push_back("a" + std::to_string(i));
        LeibnizConfAlg alg = current_algebra(ConfModule("cur", basis), e.c);
        const bool expected = scalar_leibniz_ok(e.c);
        (expected ? satisfied : violated)++;
        CHECK(verify_leibniz(alg.mod, alg.bracket).pass() == expected);
    }
    CHECK(satisfied >= 4);
    CHECK(violated >= 1);
}

TEST_CASE("representations") {
    ConfRep adj = virasoro_adjoint();
    CHECK(verify_rep(adj.alg, adj.mod, adj.left, adj.right).pass());

    for (int w : {1, 2}) {
        ConfRep r = virasoro_weight_module(w);
        CHECK(verify_rep(r.alg, r.mod, r.left, r.right).pass());
    }

    // zero actions on any module
    LeibnizConfAlg vir = virasoro();
    ConfModule m("m", {"u", "v"});
    CHECK(verify_rep(vir, m, SesqMap({vir.mod, m}, m), SesqMap({m, vir.mod}, m)).pass());

    // doubled right action breaks the mixed identities
    SesqMap doubled = vir.bracket.scaled(Rat(2));
    CHECK_FALSE(verify_rep(vir, vir.mod, vir.bracket, doubled).pass());
}

TEST_CASE("semidirect products") {
    CHECK(verify_leibniz(semidirect_virasoro_weight1().mod, semidirect_virasoro_weight1().bracket)
              .pass());
    CHECK(verify_leibniz(semidirect_affine2_module().mod, semidirect_affine2_module().bracket)
              .pass());

    // trivial action gives the direct sum with zero bracket on M
    LeibnizConfAlg vir = virasoro();
    ConfModule m("m", {"u"});
    LeibnizConfAlg sd = semidirect(vir, m, SesqMap({vir.mod, m}, m));
    CHECK(verify_leibniz(sd.mod, sd.bracket).pass());
    CHECK(sd.bracket.entry_or_zero({0, 1}).is_zero());
    CHECK(sd.bracket.entry_or_zero({1, 0}).is_zero());

    // non-skew input is rejected
    LeibnizConfAlg nil = current_nilpotent2();
    CHECK_THROWS_WITH_AS(semidirect(nil, m, SesqMap({nil.mod, m}, m)),
                         "requires a Lie conformal algebra", error);

    // abelian algebra with an action violating the module axiom: the
    // semidirect bracket exists but fails the Leibniz identity
    ConfModule ab("ab", {"a"});
    LeibnizConfAlg abelian = raw_leibniz_alg(ab, SesqMap({ab, ab}, ab));
    SesqMap act({ab, m}, m);
    {
        VarCtx ctx = act.lambda_ctx();
        ModValue v(m, ctx);
        v.coeffs[0] = Poly::partial(ctx) + lambda_var(ctx, 0);
        act.set_entry({0, 0}, v);
    }
    LeibnizConfAlg bad = semidirect(abelian, m, act);
    CHECK_FALSE(verify_leibniz(bad.mod, bad.bracket).pass());
}

TEST_CASE("coboundary in degree 0") {
    ConfRep adj = virasoro_adjoint();
    Cochain v = c0_cochain(adj, {Rat(1)});
    Cochain dv = coboundary(adj, v);
    REQUIRE(dv.degree == 1);
    // (-L_l L)|_{l=0} = -D L
    ModValue entry = dv.map->entry_or_zero({0});
    ModValue expect = -ModValue::basis_unit(adj.mod, 0, VarCtx{}).scaled(Poly::partial(VarCtx{}));
    CHECK(entry == expect);
}

TEST_CASE("coboundary vanishes for trivial structures") {
    ConfRep triv = abelian_trivial_rep();
    Rng rng(41);
    for (int n = 0; n <= 3; ++n) {
        Cochain phi = random_cochain(rng, triv, n, 2, 2);
        CHECK(coboundary(triv, phi).is_zero());
    }
}

TEST_CASE("coboundary of the identity cochain on virasoro") {
    ConfRep adj = virasoro_adjoint();
    SesqMap id({adj.alg.mod}, adj.mod);
    id.set_entry({0}, ModValue::basis_unit(adj.mod, 0, VarCtx{}));
    Cochain phi = cochain_from_map(adj, id);
    Cochain dphi = coboundary(adj, phi);
    // L_l phi(L) + phi(L)_l L - phi([L_l L]) = (D + 2l) L
    CHECK(dphi.map->entry_or_zero({0, 0}) == adj.alg.bracket.entry_or_zero({0, 0}));
}

TEST_CASE("delta squared is zero") {
    Rng rng(43);
    std::vector<ConfRep> reps{virasoro_adjoint(), virasoro_weight_module(1),
                              adjoint_rep(current_nilpotent2()), adjoint_rep(current_central3()),
                              adjoint_rep(semidirect_affine2_module())};
    for (const auto& rep : reps) {
        for (int n = 0; n <= 3; ++n) {
            for (int trial = 0; trial < 3; ++trial) {
                Cochain phi = random_cochain(rng, rep, n, 2, 2);
                CHECK(coboundary(rep, coboundary(rep, phi)).is_zero());
            }
        }
    }
}

TEST_CASE("degree cap") {
    ConfRep adj = virasoro_adjoint();
    Rng rng(47);
    Cochain phi = random_cochain(rng, adj, 5, 1, 1);
    CHECK_THROWS_AS(coboundary(adj, phi), error);
    CHECK_NOTHROW(coboundary(adj, phi, 5));
}

TEST_CASE("cocycles and coboundaries") {
    ConfRep rep = virasoro_weight_module(1);
    Rng rng(53);
    for (int n = 0; n <= 2; ++n) {
        Cochain tau = random_cochain(rng, rep, n, 2, 2);
        Cochain psi = coboundary(rep, tau);
        CHECK(is_cocycle(rep, psi));
        CHECK(is_coboundary_of(rep, psi, tau));
    }
    CHECK(is_cocycle(rep, zero_cochain(rep, 2)));
    CHECK(is_coboundary_of(rep, zero_cochain(rep, 1), zero_cochain(rep, 0)));
}

TEST_CASE("bounded preimage search") {
    ConfRep rep = virasoro_weight_module(1);
    Rng rng(59);

    // a planted witness within bounds is recovered (up to a cocycle)
    Cochain tau0 = random_cochain(rng, rep, 1, 2, 1);
    Cochain psi = coboundary(rep, tau0);
    auto tau = find_coboundary_preimage(rep, psi, 3, 2);
    REQUIRE(tau.has_value());
    CHECK(coboundary(rep, *tau) == psi);

    // zero has the zero preimage
    auto z = find_coboundary_preimage(rep, zero_cochain(rep, 2), 2, 2);
    REQUIRE(z.has_value());
    CHECK(z->is_zero());

    // a non-cocycle has no preimage at all
    Cochain bad = random_cochain(rng, rep, 2, 2, 2);
    while (is_cocycle(rep, bad)) bad = random_cochain(rng, rep, 2, 2, 2);
    CHECK_FALSE(find_coboundary_preimage(rep, bad, 2, 2).has_value());

    CHECK_THROWS_AS(find_coboundary_preimage(rep, psi, 0, 2), error);
}
