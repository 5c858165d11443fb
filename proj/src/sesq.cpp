#include "leibconf/sesq.hpp"

#include <algorithm>

namespace leibconf {

SesqMap::SesqMap(std::vector<ConfModule> srcs, ConfModule tgt, int deg)
    : sources(std::move(srcs)), target(std::move(tgt)), degree(deg) {
    if (sources.empty()) throw error("sesquilinear map needs arity >= 1");
}

void SesqMap::set_entry(const std::vector<int>& tuple, ModValue value) {
    if (static_cast<int>(tuple.size()) != arity()) throw error("tuple length does not match arity");
    for (int i = 0; i < arity(); ++i)
        if (tuple[i] < 0 || tuple[i] >= sources[i].rank()) throw error("basis index out of range");
    if (value.mod != target) throw error("entry value lies in the wrong module");
    if (value.ctx != lambda_ctx()) throw error("entry value has the wrong lambda context");
    if (value.is_zero())
        table.erase(tuple);
    else
        table[tuple] = std::move(value);
}

ModValue SesqMap::entry_or_zero(const std::vector<int>& tuple) const {
    auto it = table.find(tuple);
    if (it != table.end()) return it->second;
    return ModValue::zero(target, lambda_ctx());
}

SesqMap SesqMap::operator-() const {
    SesqMap m(sources, target, degree);
    for (const auto& [t, v] : table) m.table[t] = -v;
    return m;
}

SesqMap& SesqMap::operator+=(const SesqMap& o) {
    if (!same_shape(o)) throw error("sesquilinear map shape mismatch");
    for (const auto& [t, v] : o.table) {
        auto it = table.find(t);
        if (it == table.end()) {
            table[t] = v;
        } else {
            it->second += v;
            if (it->second.is_zero()) table.erase(it);
        }
    }
    return *this;
}

SesqMap SesqMap::scaled(const Rat& c) const {
    SesqMap m(sources, target, degree);
    if (c.is_zero()) return m;
    for (const auto& [t, v] : table) m.table[t] = v.scaled(c);
    return m;
}

std::vector<std::vector<int>> all_tuples(const std::vector<ConfModule>& sources) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(sources.size(), 0);
    for (const auto& s : sources)
        if (s.rank() == 0) return out;
    while (true) {
        out.push_back(cur);
        int i = static_cast<int>(sources.size()) - 1;
        while (i >= 0) {
            if (++cur[i] < sources[i].rank()) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

SesqMap reframe(const SesqMap& map, std::vector<ConfModule> sources, ConfModule target) {
    if (sources.size() != map.sources.size()) throw error("reframe arity mismatch");
    for (size_t i = 0; i < sources.size(); ++i)
        if (sources[i].rank() != map.sources[i].rank()) throw error("reframe source rank mismatch");
    if (target.rank() != map.target.rank()) throw error("reframe target rank mismatch");
    SesqMap out(std::move(sources), std::move(target), map.degree);
    for (const auto& [tuple, value] : map.table)
        out.set_entry(tuple, ModValue(out.target, value.ctx, value.coeffs));
    return out;
}

Poly lambda_var(const VarCtx& ctx, int i) { return Poly::variable(ctx, ctx.lambdas.at(i)); }

namespace {

void check_eval_inputs(const SesqMap& map, const std::vector<ModValue>& args,
                       const std::vector<Poly>& params, const VarCtx& out) {
    const int n = map.arity();
    if (static_cast<int>(args.size()) != n) throw error("argument count does not match arity");
    if (static_cast<int>(params.size()) != n - 1) throw error("lambda parameter count must be arity - 1");
    for (int i = 0; i < n; ++i) {
        if (args[i].mod != map.sources[i]) throw error("module mismatch between argument and source");
        if (args[i].ctx != out) throw error("argument context differs from output context");
    }
    for (const auto& p : params) {
        if (p.ctx() != out) throw error("lambda parameter not in output context");
        if (!p.is_lambda_linear_form())
            throw error("lambda parameter must be a linear form in lambda variables");
    }
}

}  // namespace

ModValue eval(const SesqMap& map, const std::vector<ModValue>& args,
              const std::vector<Poly>& params, const VarCtx& out) {
    check_eval_inputs(map, args, params, out);
    const int n = map.arity();

    Poly total(out);  // l_1 + ... + l_{n-1}
    for (const auto& p : params) total += p;
    const Poly shifted_partial = Poly::partial(out) + total;

    // substitution sending the table's canonical lambdas to the given forms
    std::map<std::string, Poly> lam_subst;
    const VarCtx tctx = map.lambda_ctx();
    for (int i = 0; i < n - 1; ++i) lam_subst[tctx.lambdas[i]] = params[i];

    ModValue result = ModValue::zero(map.target, out);
    for (const auto& [tuple, value] : map.table) {
        Poly factor = Poly::constant(out, Rat(1));
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            const Poly& c = args[i].coeffs[tuple[i]];
            if (c.is_zero()) {
                dead = true;
                break;
            }
            Poly transported = (i < n - 1) ? c.substituted({{"D", -params[i]}}, out)
                                           : c.substituted({{"D", shifted_partial}}, out);
            factor = factor * transported;
        }
        if (dead || factor.is_zero()) continue;
        result += value.substituted(lam_subst, out).scaled(factor);
    }
    return result;
}

ModValue eval_basis(const SesqMap& map, const std::vector<int>& tuple,
                    const std::vector<Poly>& params, const VarCtx& out) {
    std::vector<ModValue> args;
    args.reserve(tuple.size());
    for (size_t i = 0; i < tuple.size(); ++i)
        args.push_back(ModValue::basis_unit(map.sources[i], tuple[i], out));
    return eval(map, args, params, out);
}

ModValue transport_left(int x_index, const ModValue& v, const SesqMap& action,
                        const std::string& lambda_name) {
    VarCtx out = ctx_union(v.ctx, VarCtx({lambda_name}));
    std::vector<ModValue> args{ModValue::basis_unit(action.sources[0], x_index, out),
                               v.in_ctx(out)};
    return eval(action, args, {Poly::variable(out, lambda_name)}, out);
}

ModValue transport_right(const ModValue& v, int x_index, const SesqMap& action,
                         const Poly& param) {
    VarCtx out = ctx_union(v.ctx, param.ctx());
    std::vector<ModValue> args{v.in_ctx(out),
                               ModValue::basis_unit(action.sources[1], x_index, out)};
    return eval(action, args, {param.in_ctx(out)}, out);
}

bool check_skew(const SesqMap& bracket) {
    if (bracket.arity() != 2) throw error("skew check needs a binary map");
    if (bracket.sources[0] != bracket.sources[1] || bracket.sources[0] != bracket.target)
        throw error("skew check needs an endomorphic bracket");
    const VarCtx ctx = bracket.lambda_ctx();
    const Poly minus_d_minus_l = -Poly::partial(ctx) - lambda_var(ctx, 0);
    const int r = bracket.target.rank();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            ModValue lhs = bracket.entry_or_zero({i, j});
            ModValue rhs = bracket.entry_or_zero({j, i})
                               .substituted({{ctx.lambdas[0], minus_d_minus_l}}, ctx);
            if (!(lhs + rhs).is_zero()) return false;
        }
    return true;
}

}  // namespace leibconf
