#include "leibconf/twoterm.hpp"

#include <chrono>

#include "leibconf/parallel.hpp"

namespace leibconf {

namespace {

void require_shapes(const TwoTermAlg& a) {
    auto want = [](const SesqMap& m, std::vector<ConfModule> srcs, const ConfModule& tgt,
                   const char* what) {
        if (m.sources != srcs || m.target != tgt)
            throw error(std::string("shape mismatch in ") + what);
    };
    want(a.d, {a.g1}, a.g0, "the differential");
    want(a.r2_00, {a.g0, a.g0}, a.g0, "the (0,0) binary piece");
    want(a.r2_01, {a.g0, a.g1}, a.g1, "the (0,1) binary piece");
    want(a.r2_10, {a.g1, a.g0}, a.g1, "the (1,0) binary piece");
    want(a.r3, {a.g0, a.g0, a.g0}, a.g1, "the ternary piece");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

TwoTermAlg two_term(ConfModule g0, ConfModule g1, SesqMap d, SesqMap r2_00, SesqMap r2_01,
                    SesqMap r2_10, SesqMap r3) {
    TwoTermAlg a{std::move(g0), std::move(g1), std::move(d), std::move(r2_00),
                 std::move(r2_01), std::move(r2_10), std::move(r3)};
    require_shapes(a);
    return a;
}

TwoTermAlg zero_two_term(ConfModule g0, ConfModule g1) {
    return two_term(g0, g1, SesqMap({g1}, g0), SesqMap({g0, g0}, g0), SesqMap({g0, g1}, g1),
                    SesqMap({g1, g0}, g1), SesqMap({g0, g0, g0}, g1));
}

SesqMap identity_linmap(const ConfModule& m) {
    SesqMap f({m}, m);
    for (int i = 0; i < m.rank(); ++i) f.set_entry({i}, ModValue::basis_unit(m, i, VarCtx{}));
    return f;
}

SesqMap zero_linmap(const ConfModule& from, const ConfModule& to) {
    return SesqMap({from}, to);
}

CheckReport verify_two_term(const TwoTermAlg& a, int jobs) {
    require_shapes(a);
    auto t0 = std::chrono::steady_clock::now();
    CheckReport all;
    all.check = "two-term structure";
    all.checked++;  // (i): the G1 ⊗ G1 piece is zero by representation

    const VarCtx c1 = canon_lambdas(1);
    const VarCtx c2 = canon_lambdas(2);
    const VarCtx c3 = canon_lambdas(3);

    auto u0 = [&](int b, const VarCtx& c) { return ModValue::basis_unit(a.g0, b, c); };
    auto u1 = [&](int b, const VarCtx& c) { return ModValue::basis_unit(a.g1, b, c); };
    auto dv = [&](int b, const VarCtx& c) { return eval_basis(a.d, {b}, {}, c); };
    auto dof = [&](const ModValue& v) { return eval(a.d, {v}, {}, v.ctx); };

    // (ii)-(iv): compatibility of the differential with the binary pieces
    const long long pairs01 = static_cast<long long>(a.g0.rank()) * a.g1.rank();
    all.merge(parallel_check(pairs01, jobs, [&](long long idx, CheckReport& out) {
        const int x = static_cast<int>(idx / a.g1.rank());
        const int u = static_cast<int>(idx % a.g1.rank());
        const Poly l = lambda_var(c1, 0);
        std::vector<std::string> where{a.g0.basis[x], a.g1.basis[u]};

        ModValue r2 = dof(eval_basis(a.r2_01, {x, u}, {l}, c1)) -
                      eval(a.r2_00, {u0(x, c1), dv(u, c1)}, {l}, c1);
        out.checked++;
        if (!r2.is_zero()) out.add("2term.ii", where, r2.str());

        ModValue r3 = dof(eval_basis(a.r2_10, {u, x}, {l}, c1)) -
                      eval(a.r2_00, {dv(u, c1), u0(x, c1)}, {l}, c1);
        out.checked++;
        if (!r3.is_zero()) out.add("2term.iii", where, r3.str());
    }));
    const long long pairs11 = static_cast<long long>(a.g1.rank()) * a.g1.rank();
    all.merge(parallel_check(pairs11, jobs, [&](long long idx, CheckReport& out) {
        const int u = static_cast<int>(idx / a.g1.rank());
        const int v = static_cast<int>(idx % a.g1.rank());
        const Poly l = lambda_var(c1, 0);
        ModValue r = eval(a.r2_01, {dv(u, c1), u1(v, c1)}, {l}, c1) -
                     eval(a.r2_10, {u1(u, c1), dv(v, c1)}, {l}, c1);
        out.checked++;
        if (!r.is_zero()) out.add("2term.iv", {a.g1.basis[u], a.g1.basis[v]}, r.str());
    }));

    const Poly L1 = lambda_var(c2, 0), L2 = lambda_var(c2, 1);

    // (v): d of the ternary piece measures the Leibniz defect on G0
    const long long triples000 = static_cast<long long>(a.g0.rank()) * a.g0.rank() * a.g0.rank();
    all.merge(parallel_check(triples000, jobs, [&](long long idx, CheckReport& out) {
        const long long r0 = a.g0.rank();
        const int x = static_cast<int>(idx / (r0 * r0));
        const int y = static_cast<int>(idx / r0 % r0);
        const int z = static_cast<int>(idx % r0);
        ModValue r = dof(eval_basis(a.r3, {x, y, z}, {L1, L2}, c2)) -
                     eval(a.r2_00, {u0(x, c2), eval_basis(a.r2_00, {y, z}, {L2}, c2)}, {L1}, c2) +
                     eval(a.r2_00, {eval_basis(a.r2_00, {x, y}, {L1}, c2), u0(z, c2)}, {L1 + L2},
                          c2) +
                     eval(a.r2_00, {u0(y, c2), eval_basis(a.r2_00, {x, z}, {L1}, c2)}, {L2}, c2);
        out.checked++;
        if (!r.is_zero())
            out.add("2term.v", {a.g0.basis[x], a.g0.basis[y], a.g0.basis[z]}, r.str());
    }));

    // (vi)-(viii): the ternary piece against one degree-1 argument
    const long long triples001 = static_cast<long long>(a.g0.rank()) * a.g0.rank() * a.g1.rank();
    all.merge(parallel_check(triples001, jobs, [&](long long idx, CheckReport& out) {
        const long long r1 = a.g1.rank();
        const int x = static_cast<int>(idx / (a.g0.rank() * r1));
        const int y = static_cast<int>(idx / r1 % a.g0.rank());
        const int v = static_cast<int>(idx % r1);
        std::vector<std::string> where{a.g0.basis[x], a.g0.basis[y], a.g1.basis[v]};

        ModValue ri = eval(a.r3, {u0(x, c2), u0(y, c2), dv(v, c2)}, {L1, L2}, c2) -
                      eval(a.r2_01, {u0(x, c2), eval_basis(a.r2_01, {y, v}, {L2}, c2)}, {L1}, c2) +
                      eval(a.r2_01, {eval_basis(a.r2_00, {x, y}, {L1}, c2), u1(v, c2)}, {L1 + L2},
                           c2) +
                      eval(a.r2_01, {u0(y, c2), eval_basis(a.r2_01, {x, v}, {L1}, c2)}, {L2}, c2);
        out.checked++;
        if (!ri.is_zero()) out.add("2term.vi", where, ri.str());

        ModValue rii = eval(a.r3, {u0(x, c2), dv(v, c2), u0(y, c2)}, {L1, L2}, c2) -
                       eval(a.r2_01, {u0(x, c2), eval_basis(a.r2_10, {v, y}, {L2}, c2)}, {L1},
                            c2) +
                       eval(a.r2_10, {eval_basis(a.r2_01, {x, v}, {L1}, c2), u0(y, c2)}, {L1 + L2},
                            c2) +
                       eval(a.r2_10, {u1(v, c2), eval_basis(a.r2_00, {x, y}, {L1}, c2)}, {L2}, c2);
        out.checked++;
        if (!rii.is_zero()) out.add("2term.vii", where, rii.str());

        ModValue riii = eval(a.r3, {dv(v, c2), u0(x, c2), u0(y, c2)}, {L1, L2}, c2) -
                        eval(a.r2_10, {u1(v, c2), eval_basis(a.r2_00, {x, y}, {L2}, c2)}, {L1},
                             c2) +
                        eval(a.r2_10, {eval_basis(a.r2_10, {v, x}, {L1}, c2), u0(y, c2)},
                             {L1 + L2}, c2) +
                        eval(a.r2_01, {u0(x, c2), eval_basis(a.r2_10, {v, y}, {L1}, c2)}, {L2},
                             c2);
        out.checked++;
        if (!riii.is_zero()) out.add("2term.viii", where, riii.str());
    }));

    // (ix): the ten-term coherence of the ternary piece on G0^4
    const Poly M1 = lambda_var(c3, 0), M2 = lambda_var(c3, 1), M3 = lambda_var(c3, 2);
    const long long quads = triples000 * a.g0.rank();
    all.merge(parallel_check(quads, jobs, [&](long long idx, CheckReport& out) {
        const long long r0 = a.g0.rank();
        const int x = static_cast<int>(idx / (r0 * r0 * r0));
        const int y = static_cast<int>(idx / (r0 * r0) % r0);
        const int z = static_cast<int>(idx / r0 % r0);
        const int w = static_cast<int>(idx % r0);
        auto b0 = [&](int i) { return u0(i, c3); };
        ModValue r =
            eval(a.r2_01, {b0(x), eval_basis(a.r3, {y, z, w}, {M2, M3}, c3)}, {M1}, c3) -
            eval(a.r2_01, {b0(y), eval_basis(a.r3, {x, z, w}, {M1, M3}, c3)}, {M2}, c3) +
            eval(a.r2_01, {b0(z), eval_basis(a.r3, {x, y, w}, {M1, M2}, c3)}, {M3}, c3) +
            eval(a.r2_10, {eval_basis(a.r3, {x, y, z}, {M1, M2}, c3), b0(w)}, {M1 + M2 + M3},
                 c3) -
            eval(a.r3, {eval_basis(a.r2_00, {x, y}, {M1}, c3), b0(z), b0(w)}, {M1 + M2, M3}, c3) -
            eval(a.r3, {b0(y), eval_basis(a.r2_00, {x, z}, {M1}, c3), b0(w)}, {M2, M1 + M3}, c3) -
            eval(a.r3, {b0(y), b0(z), eval_basis(a.r2_00, {x, w}, {M1}, c3)}, {M2, M3}, c3) +
            eval(a.r3, {b0(x), eval_basis(a.r2_00, {y, z}, {M2}, c3), b0(w)}, {M1, M2 + M3}, c3) +
            eval(a.r3, {b0(x), b0(z), eval_basis(a.r2_00, {y, w}, {M2}, c3)}, {M1, M3}, c3) -
            eval(a.r3, {b0(x), b0(y), eval_basis(a.r2_00, {z, w}, {M3}, c3)}, {M1, M2}, c3);
        out.checked++;
        if (!r.is_zero())
            out.add("2term.ix", {a.g0.basis[x], a.g0.basis[y], a.g0.basis[z], a.g0.basis[w]},
                    r.str());
    }));

    all.wall_ms = ms_since(t0);
    return all;
}

HomotopyOps to_tower(const TwoTermAlg& a) {
    // qualify degree-1 basis names when the two components share names
    ConfModule c1 = a.g1;
    for (auto& b : c1.basis)
        if (a.g0.basis_index(b) >= 0) b = a.g1.name + "." + b;
    GradedModule mod(a.g0.name + "_" + a.g1.name, {{0, a.g0}, {1, c1}});
    std::map<int, SesqMap> ops;
    SesqMap rho1 = lift_to_flat(mod, a.d, {1}, 0, -1);
    if (!rho1.is_zero()) ops.emplace(1, std::move(rho1));
    SesqMap rho2 = lift_to_flat(mod, a.r2_00, {0, 0}, 0, 0);
    rho2 += lift_to_flat(mod, a.r2_01, {0, 1}, 1, 0);
    rho2 += lift_to_flat(mod, a.r2_10, {1, 0}, 1, 0);
    if (!rho2.is_zero()) ops.emplace(2, std::move(rho2));
    SesqMap rho3 = lift_to_flat(mod, a.r3, {0, 0, 0}, 1, 1);
    if (!rho3.is_zero()) ops.emplace(3, std::move(rho3));
    return make_homotopy_ops(HomotopyOps::Flavor::unshifted, std::move(mod), std::move(ops));
}

TwoTermHom two_term_hom(const TwoTermAlg& from, const TwoTermAlg& to, SesqMap f0, SesqMap f1,
                        SesqMap f2) {
    if (f0.sources != std::vector<ConfModule>{from.g0} || f0.target != to.g0)
        throw error("f0 must map G0 -> G0'");
    if (f1.sources != std::vector<ConfModule>{from.g1} || f1.target != to.g1)
        throw error("f1 must map G1 -> G1'");
    if (f2.sources != std::vector<ConfModule>{from.g0, from.g0} || f2.target != to.g1)
        throw error("f2 must map G0 ⊗ G0 -> G1'");
    return {std::move(f0), std::move(f1), std::move(f2)};
}

TwoTermHom id_hom(const TwoTermAlg& a) {
    return {identity_linmap(a.g0), identity_linmap(a.g1), SesqMap({a.g0, a.g0}, a.g1)};
}

TwoTermHom compose_hom(const TwoTermHom& g, const TwoTermHom& f) {
    if (f.f0.target != g.f0.sources[0] || f.f1.target != g.f1.sources[0])
        throw error("homomorphisms are not composable");
    const ConfModule& a0 = f.f0.sources[0];
    SesqMap f0({a0}, g.f0.target);
    for (int i = 0; i < a0.rank(); ++i)
        f0.set_entry({i}, eval(g.f0, {eval_basis(f.f0, {i}, {}, VarCtx{})}, {}, VarCtx{}));
    const ConfModule& a1 = f.f1.sources[0];
    SesqMap f1({a1}, g.f1.target);
    for (int i = 0; i < a1.rank(); ++i)
        f1.set_entry({i}, eval(g.f1, {eval_basis(f.f1, {i}, {}, VarCtx{})}, {}, VarCtx{}));

    // g2 ∘ (f0 ⊗ f0) + g1 ∘ f2
    SesqMap f2({a0, a0}, g.f1.target);
    const VarCtx c1 = f2.lambda_ctx();
    const Poly l = lambda_var(c1, 0);
    for (int i = 0; i < a0.rank(); ++i)
        for (int j = 0; j < a0.rank(); ++j) {
            ModValue v =
                eval(g.f2, {eval_basis(f.f0, {i}, {}, c1), eval_basis(f.f0, {j}, {}, c1)}, {l},
                     c1) +
                eval(g.f1, {eval_basis(f.f2, {i, j}, {l}, c1)}, {}, c1);
            f2.set_entry({i, j}, std::move(v));
        }
    return {std::move(f0), std::move(f1), std::move(f2)};
}

CheckReport verify_two_term_hom(const TwoTermAlg& a, const TwoTermAlg& b, const TwoTermHom& f) {
    two_term_hom(a, b, f.f0, f.f1, f.f2);  // shape check
    auto t0 = std::chrono::steady_clock::now();
    CheckReport all;
    all.check = "two-term homomorphism";
    const VarCtx c1 = canon_lambdas(1);
    const VarCtx c2 = canon_lambdas(2);
    const Poly l = lambda_var(c1, 0);
    const Poly L1 = lambda_var(c2, 0), L2 = lambda_var(c2, 1);

    auto f0 = [&](int i, const VarCtx& c) { return eval_basis(f.f0, {i}, {}, c); };
    auto f1of = [&](const ModValue& v) { return eval(f.f1, {v}, {}, v.ctx); };

    // chain-map condition
    for (int u = 0; u < a.g1.rank(); ++u) {
        ModValue r = eval(b.d, {eval_basis(f.f1, {u}, {}, VarCtx{})}, {}, VarCtx{}) -
                     eval(f.f0, {eval_basis(a.d, {u}, {}, VarCtx{})}, {}, VarCtx{});
        all.checked++;
        if (!r.is_zero()) all.add("hom.chain", {a.g1.basis[u]}, r.str());
    }

    // binary compatibilities
    for (int x = 0; x < a.g0.rank(); ++x)
        for (int y = 0; y < a.g0.rank(); ++y) {
            ModValue r = eval(b.r2_00, {f0(x, c1), f0(y, c1)}, {l}, c1) -
                         eval(f.f0, {eval_basis(a.r2_00, {x, y}, {l}, c1)}, {}, c1) -
                         eval(b.d, {eval_basis(f.f2, {x, y}, {l}, c1)}, {}, c1);
            all.checked++;
            if (!r.is_zero()) all.add("hom.binary-00", {a.g0.basis[x], a.g0.basis[y]}, r.str());
        }
    for (int x = 0; x < a.g0.rank(); ++x)
        for (int v = 0; v < a.g1.rank(); ++v) {
            ModValue r1 = eval(b.r2_01, {f0(x, c1), eval_basis(f.f1, {v}, {}, c1)}, {l}, c1) -
                          f1of(eval_basis(a.r2_01, {x, v}, {l}, c1)) -
                          eval(f.f2, {ModValue::basis_unit(a.g0, x, c1),
                                       eval_basis(a.d, {v}, {}, c1)},
                               {l}, c1);
            all.checked++;
            if (!r1.is_zero()) all.add("hom.binary-01", {a.g0.basis[x], a.g1.basis[v]}, r1.str());

            ModValue r2 = eval(b.r2_10, {eval_basis(f.f1, {v}, {}, c1), f0(x, c1)}, {l}, c1) -
                          f1of(eval_basis(a.r2_10, {v, x}, {l}, c1)) -
                          eval(f.f2, {eval_basis(a.d, {v}, {}, c1),
                                       ModValue::basis_unit(a.g0, x, c1)},
                               {l}, c1);
            all.checked++;
            if (!r2.is_zero()) all.add("hom.binary-10", {a.g1.basis[v], a.g0.basis[x]}, r2.str());
        }

    // ternary compatibility
    auto ua = [&](int i) { return ModValue::basis_unit(a.g0, i, c2); };
    for (int x = 0; x < a.g0.rank(); ++x)
        for (int y = 0; y < a.g0.rank(); ++y)
            for (int z = 0; z < a.g0.rank(); ++z) {
                ModValue lhs = eval(b.r3, {f0(x, c2), f0(y, c2), f0(z, c2)}, {L1, L2}, c2) -
                               f1of(eval_basis(a.r3, {x, y, z}, {L1, L2}, c2));
                ModValue rhs =
                    eval(b.r2_01, {f0(x, c2), eval_basis(f.f2, {y, z}, {L2}, c2)}, {L1}, c2) -
                    eval(b.r2_10, {eval_basis(f.f2, {x, y}, {L1}, c2), f0(z, c2)}, {L1 + L2},
                         c2) -
                    eval(b.r2_01, {f0(y, c2), eval_basis(f.f2, {x, z}, {L1}, c2)}, {L2}, c2) +
                    eval(f.f2, {ua(x), eval_basis(a.r2_00, {y, z}, {L2}, c2)}, {L1}, c2) -
                    eval(f.f2, {eval_basis(a.r2_00, {x, y}, {L1}, c2), ua(z)}, {L1 + L2}, c2) -
                    eval(f.f2, {ua(y), eval_basis(a.r2_00, {x, z}, {L1}, c2)}, {L2}, c2);
                ModValue r = lhs - rhs;
                all.checked++;
                if (!r.is_zero())
                    all.add("hom.ternary", {a.g0.basis[x], a.g0.basis[y], a.g0.basis[z]}, r.str());
            }

    all.wall_ms = ms_since(t0);
    return all;
}

SkeletalTriple skeletal_to_triple(const TwoTermAlg& a) {
    if (!a.is_skeletal()) throw error("not skeletal: the differential is nonzero");
    LeibnizConfAlg alg = make_leibniz_alg(a.g0, a.r2_00);
    ConfRep rep = make_rep(alg, a.g1, a.r2_01, a.r2_10);
    Cochain theta = cochain_from_map(rep, a.r3);
    if (!is_cocycle(rep, theta)) throw error("the ternary table is not a cocycle");
    return {std::move(alg), std::move(rep), std::move(theta)};
}

TwoTermAlg triple_to_skeletal(const ConfRep& rep, const Cochain& theta) {
    if (theta.degree != 3) throw error("a skeletal structure needs a degree-3 cochain");
    if (!is_cocycle(rep, theta)) throw error("the ternary table is not a cocycle");
    return two_term(rep.alg.mod, rep.mod, zero_linmap(rep.mod, rep.alg.mod), rep.alg.bracket,
                    rep.left, rep.right, *theta.map);
}

bool skeletal_equivalent(const TwoTermAlg& a, const TwoTermAlg& b, const SesqMap& tau) {
    if (!a.is_skeletal() || !b.is_skeletal()) return false;
    if (a.g0 != b.g0 || a.g1 != b.g1) return false;
    if (a.r2_00 != b.r2_00 || a.r2_01 != b.r2_01 || a.r2_10 != b.r2_10) return false;
    ConfRep rep = raw_rep(raw_leibniz_alg(a.g0, a.r2_00), a.g1, a.r2_01, a.r2_10);
    Cochain dtau = coboundary(rep, cochain_from_map(rep, tau));
    return b.r3 == a.r3 + *dtau.map;
}

std::optional<SesqMap> skeletal_equivalence_witness(const TwoTermAlg& a, const TwoTermAlg& b,
                                                    int max_ddeg, int max_ldeg) {
    if (!a.is_skeletal() || !b.is_skeletal()) return std::nullopt;
    if (a.g0 != b.g0 || a.g1 != b.g1) return std::nullopt;
    if (a.r2_00 != b.r2_00 || a.r2_01 != b.r2_01 || a.r2_10 != b.r2_10) return std::nullopt;
    ConfRep rep = raw_rep(raw_leibniz_alg(a.g0, a.r2_00), a.g1, a.r2_01, a.r2_10);
    Cochain diff = cochain_from_map(rep, b.r3 - a.r3);
    auto tau = find_coboundary_preimage(rep, diff, max_ddeg, max_ldeg);
    if (!tau) return std::nullopt;
    return *tau->map;
}

TwoTermAlg twist_by(const TwoTermAlg& a, const SesqMap& tau) {
    if (tau.sources != std::vector<ConfModule>{a.g0, a.g0} || tau.target != a.g1)
        throw error("tau must map G0 ⊗ G0 -> G1");
    const VarCtx c1 = canon_lambdas(1);
    const VarCtx c2 = canon_lambdas(2);
    const Poly l = lambda_var(c1, 0);
    const Poly L1 = lambda_var(c2, 0), L2 = lambda_var(c2, 1);

    SesqMap r2_00 = a.r2_00;
    for (int i = 0; i < a.g0.rank(); ++i)
        for (int j = 0; j < a.g0.rank(); ++j)
            r2_00.set_entry({i, j}, r2_00.entry_or_zero({i, j}) +
                                        eval(a.d, {eval_basis(tau, {i, j}, {l}, c1)}, {}, c1));
    SesqMap r2_01 = a.r2_01;
    for (int i = 0; i < a.g0.rank(); ++i)
        for (int v = 0; v < a.g1.rank(); ++v)
            r2_01.set_entry({i, v},
                            r2_01.entry_or_zero({i, v}) +
                                eval(tau, {ModValue::basis_unit(a.g0, i, c1),
                                           eval_basis(a.d, {v}, {}, c1)},
                                     {l}, c1));
    SesqMap r2_10 = a.r2_10;
    for (int v = 0; v < a.g1.rank(); ++v)
        for (int i = 0; i < a.g0.rank(); ++i)
            r2_10.set_entry({v, i},
                            r2_10.entry_or_zero({v, i}) +
                                eval(tau, {eval_basis(a.d, {v}, {}, c1),
                                           ModValue::basis_unit(a.g0, i, c1)},
                                     {l}, c1));

    // the ternary correction comes from the compatibility condition of the
    // connecting homomorphism (id, id, tau), with the twisted binary pieces
    // on the tau-valued slots
    SesqMap r3 = a.r3;
    auto u = [&](int i) { return ModValue::basis_unit(a.g0, i, c2); };
    for (int x = 0; x < a.g0.rank(); ++x)
        for (int y = 0; y < a.g0.rank(); ++y)
            for (int z = 0; z < a.g0.rank(); ++z) {
                ModValue corr =
                    eval(r2_01, {u(x), eval_basis(tau, {y, z}, {L2}, c2)}, {L1}, c2) -
                    eval(r2_10, {eval_basis(tau, {x, y}, {L1}, c2), u(z)}, {L1 + L2}, c2) -
                    eval(r2_01, {u(y), eval_basis(tau, {x, z}, {L1}, c2)}, {L2}, c2) +
                    eval(tau, {u(x), eval_basis(a.r2_00, {y, z}, {L2}, c2)}, {L1}, c2) -
                    eval(tau, {eval_basis(a.r2_00, {x, y}, {L1}, c2), u(z)}, {L1 + L2}, c2) -
                    eval(tau, {u(y), eval_basis(a.r2_00, {x, z}, {L1}, c2)}, {L2}, c2);
                r3.set_entry({x, y, z}, r3.entry_or_zero({x, y, z}) + corr);
            }
    return two_term(a.g0, a.g1, a.d, std::move(r2_00), std::move(r2_01), std::move(r2_10),
                    std::move(r3));
}

TwoTermHom twist_hom(const TwoTermAlg& a, const SesqMap& tau) {
    return {identity_linmap(a.g0), identity_linmap(a.g1), tau};
}

CrossedModule crossed_module(LeibnizConfAlg g, LeibnizConfAlg h, SesqMap d, SesqMap phi_l,
                             SesqMap phi_r) {
    if (d.sources != std::vector<ConfModule>{g.mod} || d.target != h.mod)
        throw error("the connecting map must send g to h");
    if (phi_l.sources != std::vector<ConfModule>{h.mod, g.mod} || phi_l.target != g.mod)
        throw error("the left action must map h ⊗ g -> g");
    if (phi_r.sources != std::vector<ConfModule>{g.mod, h.mod} || phi_r.target != g.mod)
        throw error("the right action must map g ⊗ h -> g");
    return {std::move(g), std::move(h), std::move(d), std::move(phi_l), std::move(phi_r)};
}

CheckReport verify_crossed(const CrossedModule& x, int jobs) {
    crossed_module(x.g, x.h, x.d, x.phi_l, x.phi_r);  // shapes
    auto t0 = std::chrono::steady_clock::now();
    CheckReport all;
    all.check = "crossed module";

    auto prefix = [&](CheckReport r, const std::string& tag) {
        for (auto& f : r.failures) f.identity = tag + "." + f.identity;
        all.merge(std::move(r));
    };
    prefix(verify_leibniz(x.g.mod, x.g.bracket, jobs), "crossed.g");
    prefix(verify_leibniz(x.h.mod, x.h.bracket, jobs), "crossed.h");
    prefix(verify_rep(x.h, x.g.mod, x.phi_l, x.phi_r, jobs), "crossed.action");

    const VarCtx c1 = canon_lambdas(1);
    const VarCtx c2 = canon_lambdas(2);
    const Poly l = lambda_var(c1, 0);
    const Poly L1 = lambda_var(c2, 0), L2 = lambda_var(c2, 1);
    auto ug = [&](int b, const VarCtx& c) { return ModValue::basis_unit(x.g.mod, b, c); };
    auto uh = [&](int b, const VarCtx& c) { return ModValue::basis_unit(x.h.mod, b, c); };
    auto dg = [&](int b, const VarCtx& c) { return eval_basis(x.d, {b}, {}, c); };

    // the connecting map is a morphism of algebras
    for (int u = 0; u < x.g.mod.rank(); ++u)
        for (int v = 0; v < x.g.mod.rank(); ++v) {
            ModValue r = eval(x.d, {eval_basis(x.g.bracket, {u, v}, {l}, c1)}, {}, c1) -
                         eval(x.h.bracket, {dg(u, c1), dg(v, c1)}, {l}, c1);
            all.checked++;
            if (!r.is_zero())
                all.add("crossed.d-morphism", {x.g.mod.basis[u], x.g.mod.basis[v]}, r.str());
        }

    // equivariance of the connecting map
    for (int h = 0; h < x.h.mod.rank(); ++h)
        for (int u = 0; u < x.g.mod.rank(); ++u) {
            ModValue r1 = eval(x.d, {eval_basis(x.phi_l, {h, u}, {l}, c1)}, {}, c1) -
                          eval(x.h.bracket, {uh(h, c1), dg(u, c1)}, {l}, c1);
            all.checked++;
            if (!r1.is_zero())
                all.add("crossed.eq1", {x.h.mod.basis[h], x.g.mod.basis[u]}, r1.str());
            ModValue r2 = eval(x.d, {eval_basis(x.phi_r, {u, h}, {l}, c1)}, {}, c1) -
                          eval(x.h.bracket, {dg(u, c1), uh(h, c1)}, {l}, c1);
            all.checked++;
            if (!r2.is_zero())
                all.add("crossed.eq2", {x.g.mod.basis[u], x.h.mod.basis[h]}, r2.str());
        }

    // Peiffer-type identities
    for (int u = 0; u < x.g.mod.rank(); ++u)
        for (int v = 0; v < x.g.mod.rank(); ++v) {
            ModValue r1 = eval(x.phi_l, {dg(u, c1), ug(v, c1)}, {l}, c1) -
                          eval_basis(x.g.bracket, {u, v}, {l}, c1);
            all.checked++;
            if (!r1.is_zero())
                all.add("crossed.eq3l", {x.g.mod.basis[u], x.g.mod.basis[v]}, r1.str());
            ModValue r2 = eval(x.phi_r, {ug(u, c1), dg(v, c1)}, {l}, c1) -
                          eval_basis(x.g.bracket, {u, v}, {l}, c1);
            all.checked++;
            if (!r2.is_zero())
                all.add("crossed.eq3r", {x.g.mod.basis[u], x.g.mod.basis[v]}, r2.str());
        }

    // compatibility of the actions with the bracket of g
    for (int u = 0; u < x.g.mod.rank(); ++u)
        for (int v = 0; v < x.g.mod.rank(); ++v)
            for (int h = 0; h < x.h.mod.rank(); ++h) {
                std::vector<std::string> where{x.g.mod.basis[u], x.g.mod.basis[v],
                                               x.h.mod.basis[h]};
                ModValue r4 =
                    eval(x.g.bracket, {ug(u, c2), eval_basis(x.phi_r, {v, h}, {L2}, c2)}, {L1},
                         c2) -
                    eval(x.phi_r, {eval_basis(x.g.bracket, {u, v}, {L1}, c2), uh(h, c2)},
                         {L1 + L2}, c2) -
                    eval(x.g.bracket, {ug(v, c2), eval_basis(x.phi_r, {u, h}, {L1}, c2)}, {L2},
                         c2);
                all.checked++;
                if (!r4.is_zero()) all.add("crossed.eq4", where, r4.str());

                ModValue r5 =
                    eval(x.g.bracket, {ug(u, c2), eval_basis(x.phi_l, {h, v}, {L2}, c2)}, {L1},
                         c2) -
                    eval(x.g.bracket, {eval_basis(x.phi_r, {u, h}, {L1}, c2), ug(v, c2)},
                         {L1 + L2}, c2) -
                    eval(x.phi_l, {uh(h, c2), eval_basis(x.g.bracket, {u, v}, {L1}, c2)}, {L2},
                         c2);
                all.checked++;
                if (!r5.is_zero()) all.add("crossed.eq5", where, r5.str());

                ModValue r6 =
                    eval(x.phi_l, {uh(h, c2), eval_basis(x.g.bracket, {u, v}, {L2}, c2)}, {L1},
                         c2) -
                    eval(x.g.bracket, {eval_basis(x.phi_l, {h, u}, {L1}, c2), ug(v, c2)},
                         {L1 + L2}, c2) -
                    eval(x.g.bracket, {ug(u, c2), eval_basis(x.phi_l, {h, v}, {L1}, c2)}, {L2},
                         c2);
                all.checked++;
                if (!r6.is_zero()) all.add("crossed.eq6", where, r6.str());
            }

    all.wall_ms = ms_since(t0);
    return all;
}

CrossedModule strict_to_crossed(const TwoTermAlg& a) {
    if (!a.is_strict()) throw error("not strict: the ternary table is nonzero");
    const VarCtx c1 = canon_lambdas(1);
    const Poly l = lambda_var(c1, 0);
    SesqMap gbr({a.g1, a.g1}, a.g1);
    for (int u = 0; u < a.g1.rank(); ++u)
        for (int v = 0; v < a.g1.rank(); ++v)
            gbr.set_entry({u, v}, eval(a.r2_01, {eval_basis(a.d, {u}, {}, c1),
                                                 ModValue::basis_unit(a.g1, v, c1)},
                                       {l}, c1));
    return {raw_leibniz_alg(a.g1, std::move(gbr)), raw_leibniz_alg(a.g0, a.r2_00), a.d, a.r2_01,
            a.r2_10};
}

TwoTermAlg crossed_to_strict(const CrossedModule& x) {
    return two_term(x.h.mod, x.g.mod, x.d, x.h.bracket, x.phi_l, x.phi_r,
                    SesqMap({x.h.mod, x.h.mod, x.h.mod}, x.g.mod));
}

}  // namespace leibconf
