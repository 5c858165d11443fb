#include "leibconf/linfty.hpp"

#include <chrono>

#include "leibconf/parallel.hpp"

namespace leibconf {

GradedModule::GradedModule(std::string name, std::map<int, ConfModule> comps)
    : components(std::move(comps)) {
    std::vector<std::string> basis;
    for (const auto& [d, m] : components)
        for (const auto& b : m.basis) {
            basis.push_back(b);
            degree_of.push_back(d);
        }
    flat = ConfModule(std::move(name), std::move(basis));  // enforces distinct names
}

int GradedModule::offset_of(int degree) const {
    int off = 0;
    for (const auto& [d, m] : components) {
        if (d == degree) return off;
        off += m.rank();
    }
    return -1;
}

GradedModule GradedModule::suspended(int by) const {
    std::map<int, ConfModule> comps;
    for (const auto& [d, m] : components) comps[d + by] = m;
    return GradedModule(flat.name, std::move(comps));
}

SesqMap homotopy_op_shape(const GradedModule& mod, int arity, HomotopyOps::Flavor flavor) {
    std::vector<ConfModule> srcs(arity, mod.flat);
    return SesqMap(std::move(srcs), mod.flat,
                   flavor == HomotopyOps::Flavor::unshifted ? arity - 2 : -1);
}

void require_homogeneous(const GradedModule& mod, const SesqMap& map) {
    for (const auto& s : map.sources)
        if (s != mod.flat) throw error("operation sources must be the flat module");
    if (map.target != mod.flat) throw error("operation target must be the flat module");
    for (const auto& [tuple, value] : map.table) {
        int t = map.degree;
        for (int i : tuple) t += mod.degree_of[i];
        for (int j = 0; j < mod.flat.rank(); ++j)
            if (!value.coeffs[j].is_zero() && mod.degree_of[j] != t)
                throw error("inhomogeneous table entry in graded operation");
    }
}

HomotopyOps make_homotopy_ops(HomotopyOps::Flavor flavor, GradedModule mod,
                              std::map<int, SesqMap> ops) {
    for (auto& [k, map] : ops) {
        if (k < 1) throw error("operation arity must be >= 1");
        const int want = flavor == HomotopyOps::Flavor::unshifted ? k - 2 : -1;
        if (map.degree != want)
            throw error("arity-" + std::to_string(k) + " operation must have degree " +
                        std::to_string(want));
        require_homogeneous(mod, map);
    }
    return {flavor, std::move(mod), std::move(ops)};
}

ModValue insertion_composite(const SesqMap& outer, const SesqMap& inner, int i,
                             const std::vector<int>& sigma, const std::vector<int>& tuple) {
    const int k = outer.arity(), l = inner.arity();
    const int p = k + l - 1;
    if (static_cast<int>(tuple.size()) != p) throw error("tuple length must be k+l-1");
    if (static_cast<int>(sigma.size()) != i + l - 2) throw error("shuffle size must be i+l-2");
    const VarCtx ctx = canon_lambdas(p - 1);
    const ConfModule& flat = outer.target;
    auto unit = [&](int b) { return ModValue::basis_unit(flat, b, ctx); };
    auto lam = [&](int pos) { return lambda_var(ctx, pos); };  // 0-based tuple position

    // inner factor on the shuffled block plus its anchor at position i+l-2
    std::vector<ModValue> inner_args;
    std::vector<Poly> inner_params;
    for (int u = i - 1; u <= i + l - 3; ++u) {
        inner_args.push_back(unit(tuple[sigma[u]]));
        inner_params.push_back(lam(sigma[u]));
    }
    inner_args.push_back(unit(tuple[i + l - 2]));
    ModValue inner_val = eval(inner, inner_args, inner_params, ctx);

    std::vector<ModValue> outer_args;
    std::vector<Poly> outer_params;
    for (int u = 0; u <= i - 2; ++u) {
        outer_args.push_back(unit(tuple[sigma[u]]));
        outer_params.push_back(lam(sigma[u]));
    }
    outer_args.push_back(inner_val);
    if (i < k) {
        Poly combined(ctx);
        for (const auto& q : inner_params) combined += q;
        combined += lam(i + l - 2);
        outer_params.push_back(combined);
    }
    for (int j = i + l - 1; j <= p - 1; ++j) {
        outer_args.push_back(unit(tuple[j]));
        if (j <= p - 2) outer_params.push_back(lam(j));
    }
    return eval(outer, outer_args, outer_params, ctx);
}

ModValue leibnizator_sum(const HomotopyOps& ops, int n, const std::vector<int>& tuple) {
    if (ops.flavor != HomotopyOps::Flavor::unshifted)
        throw error("structure identities take the unshifted tower");
    if (static_cast<int>(tuple.size()) != n) throw error("tuple length must equal n");
    const VarCtx ctx = canon_lambdas(n - 1);
    ModValue acc(ops.mod.flat, ctx);
    std::vector<int> degrees(n);
    for (int j = 0; j < n; ++j) degrees[j] = ops.mod.degree_of[tuple[j]];

    for (int k = 1; k <= n; ++k) {
        const int l = n + 1 - k;
        auto ko = ops.ops.find(k), lo = ops.ops.find(l);
        if (ko == ops.ops.end() || lo == ops.ops.end()) continue;
        for (int i = 1; i <= k; ++i) {
            std::vector<int> block_degrees(degrees.begin(), degrees.begin() + (i + l - 2));
            for (const auto& sh : enumerate_shuffles(i - 1, l - 1)) {
                long long prefix = 0;
                for (int u = 0; u <= i - 2; ++u) prefix += degrees[sh.images[u]];
                const int sign = koszul_sign(sh.images, block_degrees) * sh.sgn *
                                 sign_pow(static_cast<long long>(k - i - 1) * (l - 1)) *
                                 sign_pow(static_cast<long long>(l) * prefix);
                ModValue term = insertion_composite(ko->second, lo->second, i, sh.images, tuple);
                acc += sign > 0 ? term : -term;
            }
        }
    }
    return acc;
}

CheckReport verify_leib_infty(const HomotopyOps& ops, int n_max, int jobs) {
    if (ops.flavor != HomotopyOps::Flavor::unshifted)
        throw error("structure identities take the unshifted tower");
    auto t0 = std::chrono::steady_clock::now();
    CheckReport all;
    all.check = "leibnizator identities (n <= " + std::to_string(n_max) + ")";
    const long long r = ops.mod.flat.rank();
    for (int n = 1; n <= n_max; ++n) {
        long long count = 1;
        for (int j = 0; j < n; ++j) count *= r;
        CheckReport part = parallel_check(count, jobs, [&](long long idx, CheckReport& out) {
            std::vector<int> tuple(n);
            long long rest = idx;
            for (int j = n - 1; j >= 0; --j) {
                tuple[j] = static_cast<int>(rest % r);
                rest /= r;
            }
            ModValue res = leibnizator_sum(ops, n, tuple);
            out.checked++;
            if (!res.is_zero()) {
                std::vector<std::string> where{"n=" + std::to_string(n)};
                for (int j : tuple) where.push_back(ops.mod.flat.basis[j]);
                out.add("leibnizator", std::move(where), res.str());
            }
        });
        all.merge(std::move(part));
    }
    all.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return all;
}

namespace {

// sign of conjugating the arity-k table by the (de)suspension, evaluated on
// the degrees the entry sees in the shifted world
int suspension_sign(const GradedModule& shifted_mod, int k, const std::vector<int>& tuple) {
    long long e = static_cast<long long>(k) * (k - 1) / 2;
    for (int u = 0; u < k; ++u)
        e += static_cast<long long>(k - 1 - u) * shifted_mod.degree_of[tuple[u]];
    return sign_pow(e);
}

}  // namespace

HomotopyOps shift(const HomotopyOps& unshifted) {
    if (unshifted.flavor != HomotopyOps::Flavor::unshifted)
        throw error("shift takes an unshifted tower");
    GradedModule up = unshifted.mod.suspended(1);
    std::map<int, SesqMap> ops;
    for (const auto& [k, map] : unshifted.ops) {
        SesqMap m = homotopy_op_shape(up, k, HomotopyOps::Flavor::shifted);
        for (const auto& [tuple, value] : map.table) {
            const int s = suspension_sign(up, k, tuple);
            m.set_entry(tuple, s > 0 ? value : -value);
        }
        if (!m.is_zero()) ops.emplace(k, std::move(m));
    }
    return make_homotopy_ops(HomotopyOps::Flavor::shifted, std::move(up), std::move(ops));
}

HomotopyOps unshift(const HomotopyOps& shifted) {
    if (shifted.flavor != HomotopyOps::Flavor::shifted) throw error("unshift takes a shifted tower");
    GradedModule down = shifted.mod.suspended(-1);
    std::map<int, SesqMap> ops;
    for (const auto& [k, map] : shifted.ops) {
        SesqMap m = homotopy_op_shape(down, k, HomotopyOps::Flavor::unshifted);
        for (const auto& [tuple, value] : map.table) {
            const int s = suspension_sign(shifted.mod, k, tuple);
            m.set_entry(tuple, s > 0 ? value : -value);
        }
        if (!m.is_zero()) ops.emplace(k, std::move(m));
    }
    return make_homotopy_ops(HomotopyOps::Flavor::unshifted, std::move(down), std::move(ops));
}

bool ConvElem::is_zero() const {
    for (const auto& [k, m] : pieces)
        if (!m.is_zero()) return false;
    return true;
}

ConvElem make_conv_elem(GradedModule mod, int degree, std::map<int, SesqMap> pieces) {
    for (auto& [k, map] : pieces) {
        if (k < 1) throw error("piece arity must be >= 1");
        if (map.degree != degree) throw error("piece degree label must match the element degree");
        require_homogeneous(mod, map);
    }
    return {degree, std::move(mod), std::move(pieces)};
}

ConvElem conv_zero(GradedModule mod, int degree) { return {degree, std::move(mod), {}}; }

ConvElem to_conv(const HomotopyOps& shifted) {
    if (shifted.flavor != HomotopyOps::Flavor::shifted)
        throw error("convolution elements live on the shifted module");
    return {-1, shifted.mod, shifted.ops};
}

ConvElem conv_add(const ConvElem& a, const ConvElem& b) {
    if (a.mod != b.mod || a.degree != b.degree) throw error("convolution element mismatch");
    ConvElem out = a;
    for (const auto& [k, m] : b.pieces) {
        auto it = out.pieces.find(k);
        if (it == out.pieces.end())
            out.pieces.emplace(k, m);
        else {
            it->second += m;
            if (it->second.is_zero()) out.pieces.erase(it);
        }
    }
    return out;
}

ConvElem conv_scaled(const ConvElem& a, const Rat& c) {
    ConvElem out{a.degree, a.mod, {}};
    if (c.is_zero()) return out;
    for (const auto& [k, m] : a.pieces) out.pieces.emplace(k, m.scaled(c));
    return out;
}

SesqMap diamond_piece(const GradedModule& mod, const SesqMap& outer, const SesqMap& inner) {
    const int k = outer.arity(), l = inner.arity();
    const int p = k + l - 1;
    std::vector<ConfModule> srcs(p, mod.flat);
    SesqMap out(std::move(srcs), mod.flat, outer.degree + inner.degree);
    if (outer.is_zero() || inner.is_zero()) return out;
    for (const auto& tuple : all_tuples(out.sources)) {
        std::vector<int> degrees(p);
        for (int j = 0; j < p; ++j) degrees[j] = mod.degree_of[tuple[j]];
        ModValue acc(mod.flat, canon_lambdas(p - 1));
        for (int i = 1; i <= k; ++i) {
            std::vector<int> block_degrees(degrees.begin(), degrees.begin() + (i + l - 2));
            for (const auto& sh : enumerate_shuffles(i - 1, l - 1)) {
                long long prefix = 0;
                for (int u = 0; u <= i - 2; ++u) prefix += degrees[sh.images[u]];
                const int sign = koszul_sign(sh.images, block_degrees) *
                                 sign_pow(static_cast<long long>(inner.degree) * prefix);
                ModValue term = insertion_composite(outer, inner, i, sh.images, tuple);
                acc += sign > 0 ? term : -term;
            }
        }
        out.set_entry(tuple, std::move(acc));
    }
    return out;
}

namespace {

void add_piece(std::map<int, SesqMap>& pieces, int arity, SesqMap m) {
    if (m.is_zero()) return;
    auto it = pieces.find(arity);
    if (it == pieces.end())
        pieces.emplace(arity, std::move(m));
    else {
        it->second += m;
        if (it->second.is_zero()) pieces.erase(it);
    }
}

}  // namespace

ConvElem diamond(const ConvElem& a, const ConvElem& b, int max_arity) {
    if (a.mod != b.mod) throw error("convolution elements on different modules");
    ConvElem out{a.degree + b.degree, a.mod, {}};
    for (const auto& [k, ak] : a.pieces)
        for (const auto& [l, bl] : b.pieces) {
            const int p = k + l - 1;
            if (p > max_arity)
                throw error("composition arity " + std::to_string(p) +
                            " exceeds configured maximum " + std::to_string(max_arity));
            add_piece(out.pieces, p, diamond_piece(a.mod, ak, bl));
        }
    return out;
}

ConvElem gla_bracket(const ConvElem& a, const ConvElem& b, int max_arity) {
    ConvElem ab = diamond(a, b, max_arity);
    ConvElem ba = diamond(b, a, max_arity);
    const int s = sign_pow(static_cast<long long>(a.degree) * b.degree);
    return conv_add(ab, conv_scaled(ba, Rat(-s)));
}

bool is_maurer_cartan(const HomotopyOps& shifted, int n_max) {
    if (shifted.flavor != HomotopyOps::Flavor::shifted)
        throw error("the Maurer-Cartan test takes the shifted tower");
    for (int n = 1; n <= n_max; ++n) {
        SesqMap sum = homotopy_op_shape(shifted.mod, n, HomotopyOps::Flavor::shifted);
        sum.degree = -2;
        bool any = false;
        for (int k = 1; k <= n; ++k) {
            const int l = n + 1 - k;
            auto ko = shifted.ops.find(k), lo = shifted.ops.find(l);
            if (ko == shifted.ops.end() || lo == shifted.ops.end()) continue;
            sum += diamond_piece(shifted.mod, ko->second, lo->second);
            any = true;
        }
        if (any && !sum.is_zero()) return false;
    }
    return true;
}

ConvElem linfty_coboundary(const HomotopyOps& shifted, const ConvElem& phi, int max_arity) {
    ConvElem br = gla_bracket(to_conv(shifted), phi, max_arity);
    const int n = 1 - phi.degree;  // cochain degree of phi
    return sign_pow(n - 1) > 0 ? br : conv_scaled(br, Rat(-1));
}

SesqMap with_degree(SesqMap map, int degree) {
    map.degree = degree;
    return map;
}

SesqMap lift_to_flat(const GradedModule& mod, const SesqMap& piece,
                     const std::vector<int>& source_degrees, int target_degree,
                     int degree_label) {
    if (static_cast<int>(source_degrees.size()) != piece.arity())
        throw error("one source degree per argument slot");
    // components may carry qualified copies of the piece's modules, so only
    // ranks are required to match
    std::vector<int> offs(piece.arity());
    for (int i = 0; i < piece.arity(); ++i) {
        offs[i] = mod.offset_of(source_degrees[i]);
        if (offs[i] < 0) throw error("no component in degree " + std::to_string(source_degrees[i]));
        if (piece.sources[i].rank() != mod.components.at(source_degrees[i]).rank())
            throw error("piece source does not match the component rank");
    }
    const int toff = mod.offset_of(target_degree);
    if (toff < 0) throw error("no component in degree " + std::to_string(target_degree));
    if (piece.target.rank() != mod.components.at(target_degree).rank())
        throw error("piece target does not match the component rank");

    std::vector<ConfModule> srcs(piece.arity(), mod.flat);
    SesqMap out(std::move(srcs), mod.flat, degree_label);
    for (const auto& [tuple, value] : piece.table) {
        std::vector<int> t(tuple);
        for (int i = 0; i < piece.arity(); ++i) t[i] += offs[i];
        ModValue shifted(mod.flat, value.ctx);
        for (int j = 0; j < piece.target.rank(); ++j) shifted.coeffs[toff + j] = value.coeffs[j];
        out.set_entry(t, std::move(shifted));
    }
    return out;
}

HomotopyOps degree0_tower(const ConfModule& mod, const SesqMap& bracket) {
    GradedModule g(mod.name, {{0, mod}});
    std::map<int, SesqMap> ops;
    if (!bracket.is_zero()) ops.emplace(2, with_degree(bracket, 0));
    return make_homotopy_ops(HomotopyOps::Flavor::unshifted, std::move(g), std::move(ops));
}

}  // namespace leibconf
