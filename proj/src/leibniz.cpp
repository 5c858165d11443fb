#include "leibconf/leibniz.hpp"

#include <chrono>
#include <functional>

#include "leibconf/linsolve.hpp"
#include "leibconf/parallel.hpp"

namespace leibconf {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void require_bracket_shape(const ConfModule& mod, const SesqMap& br) {
    if (br.arity() != 2 || br.sources[0] != mod || br.sources[1] != mod || br.target != mod)
        throw error("bracket must be a binary endomorphic map on " + mod.name);
}

void require_action_shapes(const LeibnizConfAlg& alg, const ConfModule& m, const SesqMap& left,
                           const SesqMap& right) {
    if (left.arity() != 2 || left.sources[0] != alg.mod || left.sources[1] != m ||
        left.target != m)
        throw error("left action must map g ⊗ M -> M");
    if (right.arity() != 2 || right.sources[0] != m || right.sources[1] != alg.mod ||
        right.target != m)
        throw error("right action must map M ⊗ g -> M");
}

}  // namespace

CheckReport verify_leibniz(const ConfModule& mod, const SesqMap& br, int jobs) {
    require_bracket_shape(mod, br);
    auto t0 = std::chrono::steady_clock::now();
    const VarCtx ctx = canon_lambdas(2);
    const Poly L1 = lambda_var(ctx, 0), L2 = lambda_var(ctx, 1);
    const long long r = mod.rank();

    CheckReport rep = parallel_check(r * r * r, jobs, [&](long long idx, CheckReport& out) {
        const int i = static_cast<int>(idx / (r * r));
        const int j = static_cast<int>(idx / r % r);
        const int k = static_cast<int>(idx % r);
        auto unit = [&](int b) { return ModValue::basis_unit(mod, b, ctx); };
        ModValue lhs = eval(br, {unit(i), eval_basis(br, {j, k}, {L2}, ctx)}, {L1}, ctx);
        ModValue r1 = eval(br, {eval_basis(br, {i, j}, {L1}, ctx), unit(k)}, {L1 + L2}, ctx);
        ModValue r2 = eval(br, {unit(j), eval_basis(br, {i, k}, {L1}, ctx)}, {L2}, ctx);
        ModValue res = lhs - r1 - r2;
        out.checked++;
        if (!res.is_zero())
            out.add("leibniz", {mod.basis[i], mod.basis[j], mod.basis[k]}, res.str());
    });
    rep.check = "leibniz";
    rep.wall_ms = ms_since(t0);
    return rep;
}

LeibnizConfAlg make_leibniz_alg(ConfModule mod, SesqMap bracket) {
    CheckReport r = verify_leibniz(mod, bracket);
    if (!r.pass()) throw error("not a Leibniz conformal algebra\n" + r.summary());
    return {std::move(mod), std::move(bracket)};
}

CheckReport verify_rep(const LeibnizConfAlg& alg, const ConfModule& m, const SesqMap& left,
                       const SesqMap& right, int jobs) {
    require_action_shapes(alg, m, left, right);
    auto t0 = std::chrono::steady_clock::now();
    const ConfModule& g = alg.mod;
    const SesqMap& br = alg.bracket;
    const VarCtx ctx1 = canon_lambdas(1);
    const VarCtx ctx = canon_lambdas(2);
    const Poly l = lambda_var(ctx1, 0);
    const Poly L1 = lambda_var(ctx, 0), L2 = lambda_var(ctx, 1);
    const Poly dpoly1 = Poly::partial(ctx1);

    CheckReport all;
    all.check = "representation";

    // D-compatibility rules; these hold by construction of the transport
    // rules but are reported alongside the rest
    const long long pairs = static_cast<long long>(g.rank()) * m.rank();
    all.merge(parallel_check(pairs, jobs, [&](long long idx, CheckReport& out) {
        const int x = static_cast<int>(idx / m.rank());
        const int v = static_cast<int>(idx % m.rank());
        ModValue ux = ModValue::basis_unit(g, x, ctx1);
        ModValue uv = ModValue::basis_unit(m, v, ctx1);
        ModValue dx = ux.scaled(dpoly1), dv = uv.scaled(dpoly1);
        auto name = [&](const char* id) {
            return std::vector<std::string>{g.basis[x], m.basis[v], id};
        };
        ModValue r1 = eval(left, {dx, uv}, {l}, ctx1) + eval(left, {ux, uv}, {l}, ctx1).scaled(l);
        if (!r1.is_zero()) out.add("rep.d-shift", name("left-slot-1"), r1.str());
        ModValue r2 = eval(left, {ux, dv}, {l}, ctx1) -
                      eval(left, {ux, uv}, {l}, ctx1).scaled(Poly::partial(ctx1) + l);
        if (!r2.is_zero()) out.add("rep.d-shift", name("left-slot-2"), r2.str());
        ModValue r3 = eval(right, {dv, ux}, {l}, ctx1) + eval(right, {uv, ux}, {l}, ctx1).scaled(l);
        if (!r3.is_zero()) out.add("rep.d-shift", name("right-slot-1"), r3.str());
        ModValue r4 = eval(right, {uv, dx}, {l}, ctx1) -
                      eval(right, {uv, ux}, {l}, ctx1).scaled(Poly::partial(ctx1) + l);
        if (!r4.is_zero()) out.add("rep.d-shift", name("right-slot-2"), r4.str());
        out.checked += 4;
    }));

    // the three mixed identities on basis triples
    const long long triples = static_cast<long long>(g.rank()) * g.rank() * m.rank();
    all.merge(parallel_check(triples, jobs, [&](long long idx, CheckReport& out) {
        const int x = static_cast<int>(idx / (static_cast<long long>(g.rank()) * m.rank()));
        const int y = static_cast<int>(idx / m.rank() % g.rank());
        const int v = static_cast<int>(idx % m.rank());
        auto ug = [&](int b) { return ModValue::basis_unit(g, b, ctx); };
        auto um = [&](int b) { return ModValue::basis_unit(m, b, ctx); };
        std::vector<std::string> where{g.basis[x], g.basis[y], m.basis[v]};

        // x_l1 (y_l2 v) = [x_l1 y]_{l1+l2} v + y_l2 (x_l1 v)
        ModValue a = eval(left, {ug(x), eval_basis(left, {y, v}, {L2}, ctx)}, {L1}, ctx) -
                     eval(left, {eval_basis(br, {x, y}, {L1}, ctx), um(v)}, {L1 + L2}, ctx) -
                     eval(left, {ug(y), eval_basis(left, {x, v}, {L1}, ctx)}, {L2}, ctx);
        out.checked++;
        if (!a.is_zero()) out.add("rep.left-left", where, a.str());

        // x_l1 (v_l2 y) = (x_l1 v)_{l1+l2} y + v_l2 [x_l1 y]
        ModValue b = eval(left, {ug(x), eval_basis(right, {v, y}, {L2}, ctx)}, {L1}, ctx) -
                     eval(right, {eval_basis(left, {x, v}, {L1}, ctx), ug(y)}, {L1 + L2}, ctx) -
                     eval(right, {um(v), eval_basis(br, {x, y}, {L1}, ctx)}, {L2}, ctx);
        out.checked++;
        if (!b.is_zero()) out.add("rep.left-right", where, b.str());

        // v_l1 [x_l2 y] = (v_l1 x)_{l1+l2} y + x_l2 (v_l1 y)
        ModValue c = eval(right, {um(v), eval_basis(br, {x, y}, {L2}, ctx)}, {L1}, ctx) -
                     eval(right, {eval_basis(right, {v, x}, {L1}, ctx), ug(y)}, {L1 + L2}, ctx) -
                     eval(left, {ug(x), eval_basis(right, {v, y}, {L1}, ctx)}, {L2}, ctx);
        out.checked++;
        if (!c.is_zero()) out.add("rep.right-bracket", where, c.str());
    }));

    all.wall_ms = ms_since(t0);
    return all;
}

ConfRep make_rep(LeibnizConfAlg alg, ConfModule m, SesqMap left, SesqMap right) {
    CheckReport r = verify_rep(alg, m, left, right);
    if (!r.pass()) throw error("not a representation\n" + r.summary());
    return {std::move(alg), std::move(m), std::move(left), std::move(right)};
}

ConfRep adjoint_rep(const LeibnizConfAlg& alg) {
    return {alg, alg.mod, alg.bracket, alg.bracket};
}

LeibnizConfAlg semidirect(const LeibnizConfAlg& lie_alg, const ConfModule& m,
                          const SesqMap& rep_left) {
    require_bracket_shape(lie_alg.mod, lie_alg.bracket);
    if (rep_left.arity() != 2 || rep_left.sources[0] != lie_alg.mod ||
        rep_left.sources[1] != m || rep_left.target != m)
        throw error("action must map g ⊗ M -> M");
    if (!check_skew(lie_alg.bracket)) throw error("requires a Lie conformal algebra");

    const ConfModule& g = lie_alg.mod;
    ConfModule sum = direct_sum(g.name + "_" + m.name, g, m);
    const int off = g.rank();
    SesqMap br({sum, sum}, sum);
    for (const auto& [t, v] : lie_alg.bracket.table)
        br.set_entry({t[0], t[1]}, embed_block(v, sum, 0));
    for (const auto& [t, v] : rep_left.table)
        br.set_entry({t[0], off + t[1]}, embed_block(v, sum, off));
    return raw_leibniz_alg(std::move(sum), std::move(br));
}

LeibnizConfAlg current_algebra(const ConfModule& mod,
                               const std::vector<std::vector<std::vector<Rat>>>& c) {
    const int r = mod.rank();
    if (static_cast<int>(c.size()) != r) throw error("structure constants must be rank^3");
    SesqMap br({mod, mod}, mod);
    const VarCtx ctx = br.lambda_ctx();
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(c[i].size()) != r) throw error("structure constants must be rank^3");
        for (int j = 0; j < r; ++j) {
            if (static_cast<int>(c[i][j].size()) != r)
                throw error("structure constants must be rank^3");
            ModValue v(mod, ctx);
            for (int k = 0; k < r; ++k) v.coeffs[k] = Poly::constant(ctx, c[i][j][k]);
            br.set_entry({i, j}, std::move(v));
        }
    }
    return raw_leibniz_alg(mod, std::move(br));
}

bool Cochain::is_zero() const {
    if (degree == 0) {
        for (const auto& r : c0)
            if (!r.is_zero()) return false;
        return true;
    }
    return !map || map->is_zero();
}

Cochain c0_cochain(const ConfRep& rep, std::vector<Rat> representative) {
    if (static_cast<int>(representative.size()) != rep.mod.rank())
        throw error("degree-0 cochain length must equal rank of M");
    return {0, std::move(representative), std::nullopt};
}

Cochain c0_cochain_from_value(const ConfRep& rep, const ModValue& v) {
    if (v.mod != rep.mod) throw error("value lies in the wrong module");
    if (v.ctx.nlambdas() != 0) throw error("degree-0 representative cannot carry lambdas");
    std::vector<Rat> rs;
    rs.reserve(v.coeffs.size());
    for (const auto& p : v.coeffs) rs.push_back(p.constant_term());  // reduce mod D·M
    return {0, std::move(rs), std::nullopt};
}

Cochain cochain_from_map(const ConfRep& rep, SesqMap map) {
    const int n = map.arity();
    for (const auto& s : map.sources)
        if (s != rep.alg.mod) throw error("cochain sources must be the algebra module");
    if (map.target != rep.mod) throw error("cochain target must be the representation module");
    return {n, {}, std::move(map)};
}

Cochain zero_cochain(const ConfRep& rep, int degree) {
    if (degree == 0) return {0, std::vector<Rat>(rep.mod.rank(), Rat(0)), std::nullopt};
    std::vector<ConfModule> srcs(degree, rep.alg.mod);
    return {degree, {}, SesqMap(std::move(srcs), rep.mod)};
}

Cochain coboundary(const ConfRep& rep, const Cochain& phi, int max_degree) {
    const int n = phi.degree;
    if (n > max_degree)
        throw error("cochain degree " + std::to_string(n) + " exceeds configured maximum " +
                    std::to_string(max_degree));
    const ConfModule& g = rep.alg.mod;

    if (n == 0) {
        const VarCtx dctx;  // lambda-free
        ModValue v(rep.mod, dctx);
        for (int i = 0; i < rep.mod.rank(); ++i) v.coeffs[i] = Poly::constant(dctx, phi.c0[i]);
        SesqMap out({g}, rep.mod);
        for (int x = 0; x < g.rank(); ++x) {
            ModValue w = -transport_right(v, x, rep.right, Poly(dctx));
            out.set_entry({x}, std::move(w));
        }
        return cochain_from_map(rep, std::move(out));
    }

    const SesqMap& f = *phi.map;
    const VarCtx ctx = canon_lambdas(n);
    std::vector<Poly> L(n + 2, Poly(ctx));  // L[i] = l_i for 1 <= i <= n
    for (int i = 1; i <= n; ++i) L[i] = lambda_var(ctx, i - 1);
    Poly Lsum(ctx);
    for (int i = 1; i <= n; ++i) Lsum += L[i];
    auto unit = [&](int b) { return ModValue::basis_unit(g, b, ctx); };

    std::vector<ConfModule> srcs(n + 1, g);
    SesqMap out(srcs, rep.mod);
    for (const auto& T : all_tuples(srcs)) {
        ModValue acc(rep.mod, ctx);

        // first sum: x_i acts on the left with its own variable
        for (int i = 1; i <= n; ++i) {
            std::vector<ModValue> args;
            std::vector<Poly> params;
            for (int q = 1; q <= n + 1; ++q)
                if (q != i) args.push_back(unit(T[q - 1]));
            for (int q = 1; q <= n; ++q)
                if (q != i) params.push_back(L[q]);
            ModValue w = eval(f, args, params, ctx);
            ModValue t = eval(rep.left, {unit(T[i - 1]), w}, {L[i]}, ctx);
            acc += sign_pow(i + 1) > 0 ? t : -t;
        }

        // second sum: the value of phi acts on the right with l_1 + ... + l_n
        {
            std::vector<ModValue> args;
            std::vector<Poly> params;
            for (int q = 1; q <= n; ++q) args.push_back(unit(T[q - 1]));
            for (int q = 1; q <= n - 1; ++q) params.push_back(L[q]);
            ModValue w = eval(f, args, params, ctx);
            ModValue t = eval(rep.right, {w, unit(T[n])}, {Lsum}, ctx);
            acc += sign_pow(n + 1) > 0 ? t : -t;
        }

        // third sum: insert [x_i x_j] at position j-1. For j <= n the slot
        // keeps the variable l_i + l_j; for j = n+1 the bracket lands in the
        // last slot, which carries no variable.
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n + 1; ++j) {
                ModValue b = eval_basis(rep.alg.bracket, {T[i - 1], T[j - 1]}, {L[i]}, ctx);
                std::vector<ModValue> args;
                std::vector<Poly> params;
                std::vector<int> rest;
                for (int q = 1; q <= n + 1; ++q)
                    if (q != i) rest.push_back(q);
                for (int idx = 0; idx < n; ++idx) {
                    const int q = rest[idx];
                    args.push_back(q == j ? b : unit(T[q - 1]));
                    if (idx < n - 1) params.push_back(q == j ? L[i] + L[j] : L[q]);
                }
                ModValue t = eval(f, args, params, ctx);
                acc += sign_pow(i) > 0 ? t : -t;
            }

        out.set_entry(T, std::move(acc));
    }
    return cochain_from_map(rep, std::move(out));
}

bool is_cocycle(const ConfRep& rep, const Cochain& phi, int max_degree) {
    return coboundary(rep, phi, max_degree).is_zero();
}

bool is_coboundary_of(const ConfRep& rep, const Cochain& psi, const Cochain& tau) {
    if (psi.degree != tau.degree + 1) throw error("degree mismatch: psi must be deg(tau)+1");
    return psi == coboundary(rep, tau, std::max(4, tau.degree));
}

namespace {

// flat coordinates of a cochain: (tuple..., target index, monomial exps...)
using CoordKey = std::vector<int>;

void flatten_cochain(const Cochain& c, std::map<CoordKey, Rat>& out) {
    if (c.degree == 0) {
        for (size_t i = 0; i < c.c0.size(); ++i)
            if (!c.c0[i].is_zero()) out[{static_cast<int>(i)}] = c.c0[i];
        return;
    }
    for (const auto& [tuple, value] : c.map->table)
        for (int mi = 0; mi < value.mod.rank(); ++mi)
            for (const auto& [e, coef] : value.coeffs[mi].terms()) {
                CoordKey key = tuple;
                key.push_back(mi);
                for (int x : e) key.push_back(x);
                out[key] = coef;
            }
}

std::vector<Cochain> preimage_unknown_units(const ConfRep& rep, int n, int max_ddeg,
                                            int max_ldeg) {
    std::vector<Cochain> units;
    if (n == 0) {
        for (int i = 0; i < rep.mod.rank(); ++i) {
            std::vector<Rat> v(rep.mod.rank(), Rat(0));
            v[i] = Rat(1);
            units.push_back(c0_cochain(rep, std::move(v)));
        }
        return units;
    }
    const VarCtx ctx = canon_lambdas(n - 1);
    // monomials with D-degree <= max_ddeg and total lambda-degree <= max_ldeg
    std::vector<Exp> monos;
    Exp e(ctx.nvars(), 0);
    std::function<void(int, int)> rec = [&](int pos, int lrem) {
        if (pos == ctx.nvars()) {
            monos.push_back(e);
            return;
        }
        const int cap = pos == 0 ? max_ddeg : lrem;
        for (int d = 0; d <= cap; ++d) {
            e[pos] = d;
            rec(pos + 1, pos == 0 ? lrem : lrem - d);
        }
        e[pos] = 0;
    };
    rec(0, max_ldeg);

    std::vector<ConfModule> srcs(n, rep.alg.mod);
    for (const auto& tuple : all_tuples(srcs))
        for (int mi = 0; mi < rep.mod.rank(); ++mi)
            for (const auto& mono : monos) {
                SesqMap u(srcs, rep.mod);
                ModValue v(rep.mod, ctx);
                v.coeffs[mi] = Poly::monomial(ctx, mono, Rat(1));
                u.set_entry(tuple, std::move(v));
                units.push_back(cochain_from_map(rep, std::move(u)));
            }
    return units;
}

}  // namespace

std::optional<Cochain> find_coboundary_preimage(const ConfRep& rep, const Cochain& psi,
                                                int max_ddeg, int max_ldeg) {
    if (max_ddeg <= 0 || max_ldeg <= 0) throw error("search bounds must be positive");
    if (psi.degree < 1) throw error("target cochain must have degree >= 1");
    const int n = psi.degree - 1;

    std::vector<Cochain> units = preimage_unknown_units(rep, n, max_ddeg, max_ldeg);
    std::vector<std::map<CoordKey, Rat>> cols(units.size());
    std::map<CoordKey, Rat> rhs;
    flatten_cochain(psi, rhs);

    std::map<CoordKey, int> rows;
    auto row_of = [&](const CoordKey& k) {
        auto [it, fresh] = rows.insert({k, static_cast<int>(rows.size())});
        return it->second;
    };
    for (const auto& [k, v] : rhs) row_of(k);
    for (size_t u = 0; u < units.size(); ++u) {
        flatten_cochain(coboundary(rep, units[u], std::max(4, n)), cols[u]);
        for (const auto& [k, v] : cols[u]) row_of(k);
    }

    const int m = static_cast<int>(rows.size());
    const int ncols = static_cast<int>(units.size());
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(ncols, Rat(0)));
    std::vector<Rat> b(m, Rat(0));
    for (const auto& [k, v] : rhs) b[rows[k]] = v;
    for (int u = 0; u < ncols; ++u)
        for (const auto& [k, v] : cols[u]) a[rows[k]][u] = v;

    auto x = solve_linear(std::move(a), std::move(b), ncols);
    if (!x) return std::nullopt;

    Cochain tau = zero_cochain(rep, n);
    for (int u = 0; u < ncols; ++u) {
        if ((*x)[u].is_zero()) continue;
        if (n == 0) {
            for (int i = 0; i < rep.mod.rank(); ++i) tau.c0[i] += (*x)[u] * units[u].c0[i];
        } else {
            *tau.map += units[u].map->scaled((*x)[u]);
        }
    }
    return tau;
}

}  // namespace leibconf
