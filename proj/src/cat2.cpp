#include "leibconf/cat2.hpp"

#include <chrono>

namespace leibconf {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

TwoVectorSpace two_vs_from_complex(const SesqMap& d) {
    if (d.arity() != 1) throw error("the complex differential must be a linear map");
    ConfModule k = d.sources[0];
    ConfModule c0 = d.target;
    ConfModule c1 = direct_sum(c0.name + "_" + k.name + "_mor", c0, k);
    return {std::move(c0), std::move(k), d, std::move(c1)};
}

ModValue vs_source(const TwoVectorSpace& v, const ModValue& f) {
    if (f.mod != v.c1) throw error("morphism value expected");
    return project_block(f, v.c0, 0);
}

ModValue vs_kpart(const TwoVectorSpace& v, const ModValue& f) {
    if (f.mod != v.c1) throw error("morphism value expected");
    return project_block(f, v.k, v.split());
}

ModValue vs_target(const TwoVectorSpace& v, const ModValue& f) {
    ModValue h = vs_kpart(v, f);
    return vs_source(v, f) + eval(v.d, {h}, {}, f.ctx);
}

ModValue vs_unit(const TwoVectorSpace& v, const ModValue& object) {
    if (object.mod != v.c0) throw error("object value expected");
    return embed_block(object, v.c1, 0);
}

ModValue vs_from_parts(const TwoVectorSpace& v, const ModValue& object, const ModValue& kpart) {
    return vs_unit(v, object) + embed_block(kpart, v.c1, v.split());
}

ModValue vs_compose(const TwoVectorSpace& v, const ModValue& f, const ModValue& g) {
    if (vs_target(v, f) != vs_source(v, g)) throw error("morphisms are not composable");
    return vs_from_parts(v, vs_source(v, f), vs_kpart(v, f) + vs_kpart(v, g));
}

CheckReport verify_two_vs(const TwoVectorSpace& v) {
    CheckReport all;
    all.check = "internal category structure";
    const VarCtx c;  // lambda-free
    for (int x = 0; x < v.c0.rank(); ++x) {
        ModValue ox = ModValue::basis_unit(v.c0, x, c);
        ModValue ix = vs_unit(v, ox);
        all.checked += 2;
        if (!(vs_source(v, ix) == ox)) all.add("2vs.unit-source", {v.c0.basis[x]}, "");
        if (!(vs_target(v, ix) == ox)) all.add("2vs.unit-target", {v.c0.basis[x]}, "");
    }
    // unit laws and associativity on generated composable chains (x,h), then
    // (t, k), then (t', p)
    for (int x = 0; x < v.c0.rank(); ++x)
        for (int h = 0; h < v.k.rank(); ++h) {
            ModValue f = vs_from_parts(v, ModValue::basis_unit(v.c0, x, c),
                                       ModValue::basis_unit(v.k, h, c));
            std::vector<std::string> wf{v.c0.basis[x], v.k.basis[h]};
            all.checked += 2;
            if (!(vs_compose(v, vs_unit(v, vs_source(v, f)), f) == f))
                all.add("2vs.unit-left", wf, "");
            if (!(vs_compose(v, f, vs_unit(v, vs_target(v, f))) == f))
                all.add("2vs.unit-right", wf, "");
            for (int k2 = 0; k2 < v.k.rank(); ++k2)
                for (int p = 0; p < v.k.rank(); ++p) {
                    ModValue g = vs_from_parts(v, vs_target(v, f),
                                               ModValue::basis_unit(v.k, k2, c));
                    ModValue w = vs_from_parts(v, vs_target(v, g),
                                               ModValue::basis_unit(v.k, p, c));
                    all.checked++;
                    if (!(vs_compose(v, vs_compose(v, f, g), w) ==
                          vs_compose(v, f, vs_compose(v, g, w))))
                        all.add("2vs.compose-assoc",
                                {v.c0.basis[x], v.k.basis[h], v.k.basis[k2], v.k.basis[p]}, "");
                }
        }
    return all;
}

TwoAlg two_alg(TwoVectorSpace v, SesqMap br0, SesqMap br1, SesqMap lk) {
    if (br0.sources != std::vector<ConfModule>{v.c0, v.c0} || br0.target != v.c0)
        throw error("object bracket must map C0 ⊗ C0 -> C0");
    if (br1.sources != std::vector<ConfModule>{v.c1, v.c1} || br1.target != v.c1)
        throw error("morphism bracket must map C1 ⊗ C1 -> C1");
    if (lk.sources != std::vector<ConfModule>{v.c0, v.c0, v.c0} || lk.target != v.k)
        throw error("the Leibnizator K-part must map C0^3 -> K");
    return {std::move(v), std::move(br0), std::move(br1), std::move(lk)};
}

ModValue leibnizator_morphism(const TwoAlg& a, const ModValue& x, const ModValue& y,
                              const ModValue& z) {
    const VarCtx& ctx = x.ctx;
    const Poly L1 = lambda_var(ctx, 0), L2 = lambda_var(ctx, 1);
    ModValue src = eval(a.br0, {x, eval(a.br0, {y, z}, {L2}, ctx)}, {L1}, ctx);
    ModValue kp = eval(a.lk, {x, y, z}, {L1, L2}, ctx);
    return vs_from_parts(a.v, src, kp);
}

namespace {

// generator morphisms used for naturality checks: unit on a basis object or
// a pure kernel generator
struct GenChoice {
    bool generator;
    int index;
};

ModValue gen_morphism(const TwoAlg& a, const GenChoice& g, const VarCtx& ctx) {
    if (g.generator)
        return embed_block(ModValue::basis_unit(a.v.k, g.index, ctx), a.v.c1, a.v.split());
    return vs_unit(a.v, ModValue::basis_unit(a.v.c0, g.index, ctx));
}

}  // namespace

CheckReport verify_two_alg(const TwoAlg& a, int jobs) {
    (void)jobs;
    auto t0 = std::chrono::steady_clock::now();
    two_alg(a.v, a.br0, a.br1, a.lk);  // shapes
    CheckReport all;
    all.check = "conformal 2-algebra";
    all.merge(verify_two_vs(a.v));

    const TwoVectorSpace& v = a.v;
    const VarCtx c1x = canon_lambdas(1);
    const VarCtx c2x = canon_lambdas(2);
    const VarCtx c3x = canon_lambdas(3);
    const Poly l = lambda_var(c1x, 0);

    // functoriality of the bracket
    for (int i = 0; i < v.c1.rank(); ++i)
        for (int j = 0; j < v.c1.rank(); ++j) {
            ModValue f = ModValue::basis_unit(v.c1, i, c1x);
            ModValue g = ModValue::basis_unit(v.c1, j, c1x);
            ModValue br = eval(a.br1, {f, g}, {l}, c1x);
            std::vector<std::string> where{v.c1.basis[i], v.c1.basis[j]};
            ModValue rs = vs_source(v, br) -
                          eval(a.br0, {vs_source(v, f), vs_source(v, g)}, {l}, c1x);
            all.checked++;
            if (!rs.is_zero()) all.add("2alg.source", where, rs.str());
            ModValue rt = vs_target(v, br) -
                          eval(a.br0, {vs_target(v, f), vs_target(v, g)}, {l}, c1x);
            all.checked++;
            if (!rt.is_zero()) all.add("2alg.target", where, rt.str());
        }
    for (int x = 0; x < v.c0.rank(); ++x)
        for (int y = 0; y < v.c0.rank(); ++y) {
            ModValue ix = vs_unit(v, ModValue::basis_unit(v.c0, x, c1x));
            ModValue iy = vs_unit(v, ModValue::basis_unit(v.c0, y, c1x));
            ModValue r = eval(a.br1, {ix, iy}, {l}, c1x) -
                         vs_unit(v, eval_basis(a.br0, {x, y}, {l}, c1x));
            all.checked++;
            if (!r.is_zero()) all.add("2alg.identity", {v.c0.basis[x], v.c0.basis[y]}, r.str());
        }

    // interchange with composition on generated composable pairs: K-parts of
    // the bracket of composites match the sum of the factor brackets
    for (int x = 0; x < v.c0.rank(); ++x)
        for (int h = 0; h < v.k.rank(); ++h)
            for (int h2 = 0; h2 < v.k.rank(); ++h2)
                for (int y = 0; y < v.c0.rank(); ++y)
                    for (int p = 0; p < v.k.rank(); ++p)
                        for (int p2 = 0; p2 < v.k.rank(); ++p2) {
                            ModValue f = vs_from_parts(v, ModValue::basis_unit(v.c0, x, c1x),
                                                       ModValue::basis_unit(v.k, h, c1x));
                            ModValue f2 = vs_from_parts(v, vs_target(v, f),
                                                        ModValue::basis_unit(v.k, h2, c1x));
                            ModValue g = vs_from_parts(v, ModValue::basis_unit(v.c0, y, c1x),
                                                       ModValue::basis_unit(v.k, p, c1x));
                            ModValue g2 = vs_from_parts(v, vs_target(v, g),
                                                        ModValue::basis_unit(v.k, p2, c1x));
                            ModValue lhs = eval(a.br1, {vs_compose(v, f, f2),
                                                        vs_compose(v, g, g2)},
                                                {l}, c1x);
                            ModValue b1 = eval(a.br1, {f, g}, {l}, c1x);
                            ModValue b2 = eval(a.br1, {f2, g2}, {l}, c1x);
                            ModValue rhs = vs_from_parts(v, vs_source(v, b1),
                                                         vs_kpart(v, b1) + vs_kpart(v, b2));
                            all.checked++;
                            if (!(lhs == rhs))
                                all.add("2alg.interchange",
                                        {v.c0.basis[x], v.k.basis[h], v.k.basis[h2],
                                         v.c0.basis[y], v.k.basis[p], v.k.basis[p2]},
                                        (lhs - rhs).str());
                        }

    // the Leibnizator maps [x [y z]] to [[x y] z] + [y [x z]]
    {
        const Poly L1 = lambda_var(c2x, 0), L2 = lambda_var(c2x, 1);
        for (const auto& t : all_tuples({v.c0, v.c0, v.c0})) {
            auto u = [&](int b) { return ModValue::basis_unit(v.c0, b, c2x); };
            ModValue lz = leibnizator_morphism(a, u(t[0]), u(t[1]), u(t[2]));
            ModValue want =
                eval(a.br0, {eval_basis(a.br0, {t[0], t[1]}, {L1}, c2x), u(t[2])}, {L1 + L2},
                     c2x) +
                eval(a.br0, {u(t[1]), eval_basis(a.br0, {t[0], t[2]}, {L1}, c2x)}, {L2}, c2x);
            ModValue r = vs_target(v, lz) - want;
            all.checked++;
            if (!r.is_zero())
                all.add("2alg.leibnizator-target",
                        {v.c0.basis[t[0]], v.c0.basis[t[1]], v.c0.basis[t[2]]}, r.str());
        }
    }

    // naturality of the Leibnizator in all three slots against generator
    // morphisms; identity slots run over basis objects
    {
        const Poly L1 = lambda_var(c2x, 0), L2 = lambda_var(c2x, 1);
        for (int mask = 1; mask < 8; ++mask) {
            std::vector<std::vector<GenChoice>> slot_choices(3);
            for (int s = 0; s < 3; ++s) {
                const bool gen = mask & (1 << s);
                const int n = gen ? v.k.rank() : v.c0.rank();
                for (int i = 0; i < n; ++i) slot_choices[s].push_back({gen, i});
            }
            for (const auto& cf : slot_choices[0])
                for (const auto& cg : slot_choices[1])
                    for (const auto& ch : slot_choices[2]) {
                        ModValue f = gen_morphism(a, cf, c2x);
                        ModValue g = gen_morphism(a, cg, c2x);
                        ModValue h = gen_morphism(a, ch, c2x);
                        ModValue lhs =
                            eval(a.lk,
                                 {vs_target(v, f), vs_target(v, g), vs_target(v, h)}, {L1, L2},
                                 c2x) +
                            vs_kpart(v, eval(a.br1, {f, eval(a.br1, {g, h}, {L2}, c2x)}, {L1},
                                             c2x));
                        ModValue rhs =
                            vs_kpart(v,
                                     eval(a.br1, {eval(a.br1, {f, g}, {L1}, c2x), h}, {L1 + L2},
                                          c2x) +
                                         eval(a.br1, {g, eval(a.br1, {f, h}, {L1}, c2x)}, {L2},
                                              c2x)) +
                            eval(a.lk, {vs_source(v, f), vs_source(v, g), vs_source(v, h)},
                                 {L1, L2}, c2x);
                        ModValue r = lhs - rhs;
                        all.checked++;
                        if (!r.is_zero())
                            all.add("2alg.naturality", {"mask=" + std::to_string(mask)}, r.str());
                    }
        }
    }

    // coherence of the two rewriting paths on C0^4
    {
        const Poly L1 = lambda_var(c3x, 0), L2 = lambda_var(c3x, 1), L3 = lambda_var(c3x, 2);
        auto br0v = [&](const ModValue& p, const ModValue& q, const Poly& param) {
            return eval(a.br0, {p, q}, {param}, c3x);
        };
        auto lkv = [&](const ModValue& p, const ModValue& q, const ModValue& r, const Poly& m1,
                       const Poly& m2) { return eval(a.lk, {p, q, r}, {m1, m2}, c3x); };
        auto whisker_left = [&](const ModValue& obj, const ModValue& morph, const Poly& param) {
            // [1_obj param morph]
            return vs_kpart(v, eval(a.br1, {vs_unit(v, obj), morph}, {param}, c3x));
        };
        auto whisker_right = [&](const ModValue& morph, const ModValue& obj, const Poly& param) {
            return vs_kpart(v, eval(a.br1, {morph, vs_unit(v, obj)}, {param}, c3x));
        };
        for (const auto& t : all_tuples({v.c0, v.c0, v.c0, v.c0})) {
            auto u = [&](int b) { return ModValue::basis_unit(v.c0, b, c3x); };
            ModValue x = u(t[0]), y = u(t[1]), z = u(t[2]), w = u(t[3]);
            ModValue xy = br0v(x, y, L1), xz = br0v(x, z, L1), xw = br0v(x, w, L1);
            ModValue yz = br0v(y, z, L2), yw = br0v(y, w, L2), zw = br0v(z, w, L3);

            auto lmorph = [&](const ModValue& p, const ModValue& q, const ModValue& r,
                              const Poly& m1, const Poly& m2) {
                ModValue src = eval(a.br0, {p, eval(a.br0, {q, r}, {m2}, c3x)}, {m1}, c3x);
                return vs_from_parts(a.v, src, lkv(p, q, r, m1, m2));
            };

            // left path: [x L_{y,z,w}], then L_{x,[y z],w} + L_{x,z,[y w]},
            // then [L_{x,y,z} w] + [z L_{x,y,w}]
            ModValue left = whisker_left(x, lmorph(y, z, w, L2, L3), L1) +
                            lkv(x, yz, w, L1, L2 + L3) + lkv(x, z, yw, L1, L3) +
                            whisker_right(lmorph(x, y, z, L1, L2), w, L1 + L2 + L3) +
                            whisker_left(z, lmorph(x, y, w, L1, L2), L3);
            // right path: L_{x,y,[z w]}, then [y L_{x,z,w}], then
            // L_{[x y],z,w} + L_{y,[x z],w} + L_{y,z,[x w]}
            ModValue right = lkv(x, y, zw, L1, L2) +
                             whisker_left(y, lmorph(x, z, w, L1, L3), L2) +
                             lkv(xy, z, w, L1 + L2, L3) + lkv(y, xz, w, L2, L1 + L3) +
                             lkv(y, z, xw, L2, L3);
            ModValue r = left - right;
            all.checked++;
            if (!r.is_zero())
                all.add("2alg.coherence",
                        {v.c0.basis[t[0]], v.c0.basis[t[1]], v.c0.basis[t[2]], v.c0.basis[t[3]]},
                        r.str());
        }
    }

    all.wall_ms = ms_since(t0);
    return all;
}

TwoAlg functor_t(const TwoTermAlg& a) {
    CheckReport r = verify_two_term(a);
    if (!r.pass()) throw error("two-term input fails verification\n" + r.summary());
    TwoVectorSpace v = two_vs_from_complex(a.d);
    const int off = v.split();

    SesqMap br1({v.c1, v.c1}, v.c1);
    const VarCtx ctx = br1.lambda_ctx();
    const Poly l = lambda_var(ctx, 0);
    for (int x = 0; x < a.g0.rank(); ++x)
        for (int y = 0; y < a.g0.rank(); ++y)
            br1.set_entry({x, y}, embed_block(a.r2_00.entry_or_zero({x, y}), v.c1, 0));
    for (int x = 0; x < a.g0.rank(); ++x)
        for (int kk = 0; kk < a.g1.rank(); ++kk) {
            br1.set_entry({x, off + kk}, embed_block(a.r2_01.entry_or_zero({x, kk}), v.c1, off));
            br1.set_entry({off + kk, x}, embed_block(a.r2_10.entry_or_zero({kk, x}), v.c1, off));
        }
    for (int h = 0; h < a.g1.rank(); ++h)
        for (int kk = 0; kk < a.g1.rank(); ++kk) {
            ModValue dh = eval_basis(a.d, {h}, {}, ctx);
            ModValue val = eval(a.r2_01, {dh, ModValue::basis_unit(a.g1, kk, ctx)}, {l}, ctx);
            br1.set_entry({off + h, off + kk}, embed_block(val, v.c1, off));
        }

    return two_alg(v, a.r2_00, std::move(br1), -a.r3);
}

TwoTermAlg functor_s(const TwoAlg& a) {
    const TwoVectorSpace& v = a.v;
    const VarCtx ctx = canon_lambdas(1);
    const Poly l = lambda_var(ctx, 0);
    SesqMap r2_01({v.c0, v.k}, v.k);
    SesqMap r2_10({v.k, v.c0}, v.k);
    for (int x = 0; x < v.c0.rank(); ++x)
        for (int kk = 0; kk < v.k.rank(); ++kk) {
            ModValue ix = vs_unit(v, ModValue::basis_unit(v.c0, x, ctx));
            ModValue hk = embed_block(ModValue::basis_unit(v.k, kk, ctx), v.c1, v.split());
            r2_01.set_entry({x, kk}, vs_kpart(v, eval(a.br1, {ix, hk}, {l}, ctx)));
            r2_10.set_entry({kk, x}, vs_kpart(v, eval(a.br1, {hk, ix}, {l}, ctx)));
        }
    return two_term(v.c0, v.k, v.d, a.br0, std::move(r2_01), std::move(r2_10), -a.lk);
}

TwoAlgHom two_alg_hom(const TwoAlg& from, const TwoAlg& to, SesqMap f0, SesqMap f1,
                      SesqMap f2k) {
    if (f0.sources != std::vector<ConfModule>{from.v.c0} || f0.target != to.v.c0)
        throw error("F0 must map C0 -> C0'");
    if (f1.sources != std::vector<ConfModule>{from.v.c1} || f1.target != to.v.c1)
        throw error("F1 must map C1 -> C1'");
    if (f2k.sources != std::vector<ConfModule>{from.v.c0, from.v.c0} || f2k.target != to.v.k)
        throw error("F2 must map C0 ⊗ C0 -> K'");
    return {std::move(f0), std::move(f1), std::move(f2k)};
}

TwoAlgHom two_alg_id_hom(const TwoAlg& a) {
    return {identity_linmap(a.v.c0), identity_linmap(a.v.c1),
            SesqMap({a.v.c0, a.v.c0}, a.v.k)};
}

namespace {

// the F2 morphism at object values: source br0'(F0 x, F0 y), given K-part
ModValue f2_morphism(const TwoAlg& to, const TwoAlgHom& f, const ModValue& f0x,
                     const ModValue& f0y, const ModValue& kpart, const Poly& param) {
    ModValue src = eval(to.br0, {f0x, f0y}, {param}, f0x.ctx);
    return vs_from_parts(to.v, src, kpart);
}

}  // namespace

CheckReport verify_two_alg_hom(const TwoAlg& a, const TwoAlg& b, const TwoAlgHom& f) {
    two_alg_hom(a, b, f.f0, f.f1, f.f2k);
    CheckReport all;
    all.check = "2-algebra homomorphism";
    const VarCtx c1x = canon_lambdas(1);
    const VarCtx c2x = canon_lambdas(2);
    const Poly l = lambda_var(c1x, 0);

    auto f0v = [&](const ModValue& x) { return eval(f.f0, {x}, {}, x.ctx); };
    auto f1v = [&](const ModValue& m) { return eval(f.f1, {m}, {}, m.ctx); };

    // compatibility with the structure maps
    for (int i = 0; i < a.v.c1.rank(); ++i) {
        ModValue m = ModValue::basis_unit(a.v.c1, i, VarCtx{});
        all.checked += 2;
        if (!(vs_source(b.v, f1v(m)) == f0v(vs_source(a.v, m))))
            all.add("2alghom.source", {a.v.c1.basis[i]}, "");
        if (!(vs_target(b.v, f1v(m)) == f0v(vs_target(a.v, m))))
            all.add("2alghom.target", {a.v.c1.basis[i]}, "");
    }
    for (int x = 0; x < a.v.c0.rank(); ++x) {
        ModValue ox = ModValue::basis_unit(a.v.c0, x, VarCtx{});
        all.checked++;
        if (!(f1v(vs_unit(a.v, ox)) == vs_unit(b.v, f0v(ox))))
            all.add("2alghom.unit", {a.v.c0.basis[x]}, "");
    }

    // F2 has the right target
    for (int x = 0; x < a.v.c0.rank(); ++x)
        for (int y = 0; y < a.v.c0.rank(); ++y) {
            ModValue f0x = f0v(ModValue::basis_unit(a.v.c0, x, c1x));
            ModValue f0y = f0v(ModValue::basis_unit(a.v.c0, y, c1x));
            ModValue morph =
                f2_morphism(b, f, f0x, f0y, f.f2k.entry_or_zero({x, y}).in_ctx(c1x), l);
            ModValue r = vs_target(b.v, morph) - f0v(eval_basis(a.br0, {x, y}, {l}, c1x));
            all.checked++;
            if (!r.is_zero()) all.add("2alghom.f2-target", {a.v.c0.basis[x], a.v.c0.basis[y]}, r.str());
        }

    // naturality of F2 against generator morphisms
    for (int mask = 1; mask < 4; ++mask) {
        std::vector<std::vector<GenChoice>> slot_choices(2);
        for (int s = 0; s < 2; ++s) {
            const bool gen = mask & (1 << s);
            const int n = gen ? a.v.k.rank() : a.v.c0.rank();
            for (int i = 0; i < n; ++i) slot_choices[s].push_back({gen, i});
        }
        for (const auto& cf : slot_choices[0])
            for (const auto& cg : slot_choices[1]) {
                ModValue p = gen_morphism(a, cf, c1x);
                ModValue q = gen_morphism(a, cg, c1x);
                auto f2_at = [&](const ModValue& ox, const ModValue& oy) {
                    return eval(f.f2k, {ox, oy}, {l}, c1x);
                };
                ModValue lhs = f2_at(vs_target(a.v, p), vs_target(a.v, q)) +
                               vs_kpart(b.v, eval(b.br1, {f1v(p), f1v(q)}, {l}, c1x));
                ModValue rhs = vs_kpart(b.v, f1v(eval(a.br1, {p, q}, {l}, c1x))) +
                               f2_at(vs_source(a.v, p), vs_source(a.v, q));
                ModValue r = lhs - rhs;
                all.checked++;
                if (!r.is_zero()) all.add("2alghom.f2-natural", {"mask=" + std::to_string(mask)}, r.str());
            }
    }

    // compatibility with the two Leibnizators
    {
        const Poly L1 = lambda_var(c2x, 0), L2 = lambda_var(c2x, 1);
        for (const auto& t : all_tuples({a.v.c0, a.v.c0, a.v.c0})) {
            auto u = [&](int i) { return ModValue::basis_unit(a.v.c0, i, c2x); };
            ModValue x = u(t[0]), y = u(t[1]), z = u(t[2]);
            ModValue fx = f0v(x), fy = f0v(y), fz = f0v(z);
            auto f2m = [&](const ModValue& ox, const ModValue& oy, const Poly& param) {
                return f2_morphism(b, f, f0v(ox), f0v(oy), eval(f.f2k, {ox, oy}, {param}, c2x),
                                   param);
            };
            ModValue lf = leibnizator_morphism(a, x, y, z);
            ModValue left = vs_kpart(b.v, eval(b.br1, {vs_unit(b.v, fx), f2m(y, z, L2)}, {L1},
                                               c2x)) +
                            eval(f.f2k, {x, eval(a.br0, {y, z}, {L2}, c2x)}, {L1}, c2x) +
                            vs_kpart(b.v, f1v(lf));
            ModValue right =
                eval(b.lk, {fx, fy, fz}, {L1, L2}, c2x) +
                vs_kpart(b.v,
                         eval(b.br1, {f2m(x, y, L1), vs_unit(b.v, fz)}, {L1 + L2}, c2x)) +
                vs_kpart(b.v, eval(b.br1, {vs_unit(b.v, fy), f2m(x, z, L1)}, {L2}, c2x)) +
                eval(f.f2k, {eval(a.br0, {x, y}, {L1}, c2x), z}, {L1 + L2}, c2x) +
                eval(f.f2k, {y, eval(a.br0, {x, z}, {L1}, c2x)}, {L2}, c2x);
            ModValue r = left - right;
            all.checked++;
            if (!r.is_zero())
                all.add("2alghom.coherence",
                        {a.v.c0.basis[t[0]], a.v.c0.basis[t[1]], a.v.c0.basis[t[2]]}, r.str());
        }
    }
    return all;
}

TwoAlgHom compose_two_alg_hom(const TwoAlg& a, const TwoAlg& b, const TwoAlg& c,
                              const TwoAlgHom& g, const TwoAlgHom& f) {
    SesqMap f0({a.v.c0}, c.v.c0);
    for (int i = 0; i < a.v.c0.rank(); ++i)
        f0.set_entry({i}, eval(g.f0, {eval_basis(f.f0, {i}, {}, VarCtx{})}, {}, VarCtx{}));
    SesqMap f1({a.v.c1}, c.v.c1);
    for (int i = 0; i < a.v.c1.rank(); ++i)
        f1.set_entry({i}, eval(g.f1, {eval_basis(f.f1, {i}, {}, VarCtx{})}, {}, VarCtx{}));

    SesqMap f2k({a.v.c0, a.v.c0}, c.v.k);
    const VarCtx ctx = f2k.lambda_ctx();
    const Poly l = lambda_var(ctx, 0);
    for (int x = 0; x < a.v.c0.rank(); ++x)
        for (int y = 0; y < a.v.c0.rank(); ++y) {
            ModValue fx = eval_basis(f.f0, {x}, {}, ctx);
            ModValue fy = eval_basis(f.f0, {y}, {}, ctx);
            // K-part of (G2 at (F0 x, F0 y)) followed by G1(F2 at (x,y))
            ModValue first = eval(g.f2k, {fx, fy}, {l}, ctx);
            ModValue f2xy =
                f2_morphism(b, f, fx, fy, f.f2k.entry_or_zero({x, y}).in_ctx(ctx), l);
            ModValue second = vs_kpart(c.v, eval(g.f1, {f2xy}, {}, ctx));
            f2k.set_entry({x, y}, first + second);
        }
    return {std::move(f0), std::move(f1), std::move(f2k)};
}

TwoAlgHom functor_t_hom(const TwoTermAlg& from, const TwoTermAlg& to, const TwoTermHom& f) {
    TwoAlg ta = functor_t(from), tb = functor_t(to);
    SesqMap f1({ta.v.c1}, tb.v.c1);
    for (int x = 0; x < from.g0.rank(); ++x)
        f1.set_entry({x}, embed_block(eval_basis(f.f0, {x}, {}, VarCtx{}), tb.v.c1, 0));
    for (int u = 0; u < from.g1.rank(); ++u)
        f1.set_entry({ta.v.split() + u},
                     embed_block(eval_basis(f.f1, {u}, {}, VarCtx{}), tb.v.c1, tb.v.split()));
    return two_alg_hom(ta, tb, f.f0, std::move(f1), -f.f2);
}

TwoTermHom functor_s_hom(const TwoAlg& from, const TwoAlg& to, const TwoAlgHom& f) {
    TwoTermAlg sa = functor_s(from), sb = functor_s(to);
    SesqMap f1({from.v.k}, to.v.k);
    for (int u = 0; u < from.v.k.rank(); ++u) {
        ModValue m = embed_block(ModValue::basis_unit(from.v.k, u, VarCtx{}), from.v.c1,
                                 from.v.split());
        f1.set_entry({u}, vs_kpart(to.v, eval(f.f1, {m}, {}, VarCtx{})));
    }
    return two_term_hom(sa, sb, f.f0, std::move(f1), -f.f2k);
}

TwoAlgHom alpha_iso(const TwoAlg& a) {
    TwoAlg tsa = functor_t(functor_s(a));
    return two_alg_hom(tsa, a, identity_linmap(a.v.c0), identity_linmap(a.v.c1),
                       SesqMap({a.v.c0, a.v.c0}, a.v.k));
}

namespace {

Poly det_poly(std::vector<std::vector<Poly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Poly::constant(VarCtx{}, Rat(1));
    if (n == 1) return m[0][0];
    Poly det(VarCtx{});
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_poly(std::move(minor));
        det += j % 2 == 0 ? term : -term;
    }
    return det;
}

}  // namespace

std::optional<SesqMap> inverse_linmap(const SesqMap& f) {
    if (f.arity() != 1 || f.sources[0].rank() != f.target.rank()) return std::nullopt;
    const int n = f.target.rank();
    // matrix m[i][j] = coefficient of target basis i in f(source basis j)
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(VarCtx{})));
    for (int j = 0; j < n; ++j) {
        ModValue v = f.entry_or_zero({j});
        for (int i = 0; i < n; ++i) m[i][j] = v.coeffs[i];
    }
    Poly det = det_poly(m);
    if (!det.is_constant() || det.is_zero()) return std::nullopt;
    const Rat det_inv = Rat(1) / det.constant_term();

    SesqMap inv({f.target}, f.sources[0]);
    for (int j = 0; j < n; ++j) {
        ModValue col(f.sources[0], VarCtx{});
        for (int i = 0; i < n; ++i) {
            // cofactor expansion for the adjugate: entry (i,j) of the
            // inverse is cof(j,i)/det
            std::vector<std::vector<Poly>> minor;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<Poly> row;
                for (int c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Poly cof = det_poly(std::move(minor)).scaled(Rat(sign_pow(i + j))).scaled(det_inv);
            col.coeffs[i] = cof;
        }
        inv.set_entry({j}, std::move(col));
    }
    return inv;
}

std::optional<TwoAlgHom> inverse_two_alg_hom(const TwoAlg& a, const TwoAlg& b,
                                             const TwoAlgHom& f) {
    auto g0 = inverse_linmap(f.f0);
    auto g1 = inverse_linmap(f.f1);
    if (!g0 || !g1) return std::nullopt;
    SesqMap g2k({b.v.c0, b.v.c0}, a.v.k);
    const VarCtx ctx = g2k.lambda_ctx();
    const Poly l = lambda_var(ctx, 0);
    for (int x = 0; x < b.v.c0.rank(); ++x)
        for (int y = 0; y < b.v.c0.rank(); ++y) {
            ModValue ax = eval_basis(*g0, {x}, {}, ctx);
            ModValue ay = eval_basis(*g0, {y}, {}, ctx);
            ModValue f2m = f2_morphism(b, f, eval(f.f0, {ax}, {}, ctx),
                                       eval(f.f0, {ay}, {}, ctx), eval(f.f2k, {ax, ay}, {l}, ctx),
                                       l);
            g2k.set_entry({x, y}, -vs_kpart(a.v, eval(*g1, {f2m}, {}, ctx)));
        }
    return two_alg_hom(b, a, std::move(*g0), std::move(*g1), std::move(g2k));
}

}  // namespace leibconf
