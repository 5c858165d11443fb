#pragma once

#include <map>
#include <optional>
#include <vector>

#include "leibconf/conf_module.hpp"

namespace leibconf {

// An n-ary conformal sesquilinear map, stored as a structure-constant table
// over basis n-tuples. Absent entries are zero. Table values live over the
// canonical lambda context l1..l_{n-1}; the last argument slot carries no
// lambda variable of its own.
//
// The table determines the map on all of mod ⊗ Q[D] through the transport
// rules: a factor D^a on argument i < n contributes (-l_i)^a, and on the last
// argument contributes (D + l_1 + ... + l_{n-1})^a.
struct SesqMap {
    std::vector<ConfModule> sources;
    ConfModule target;
    int degree = 0;  // grading label; 0 in ungraded contexts
    std::map<std::vector<int>, ModValue> table;

    SesqMap() = default;
    SesqMap(std::vector<ConfModule> srcs, ConfModule tgt, int deg = 0);

    int arity() const { return static_cast<int>(sources.size()); }
    VarCtx lambda_ctx() const { return canon_lambdas(arity() - 1); }

    void set_entry(const std::vector<int>& tuple, ModValue value);
    ModValue entry_or_zero(const std::vector<int>& tuple) const;
    bool is_zero() const { return table.empty(); }
    bool same_shape(const SesqMap& o) const {
        return sources == o.sources && target == o.target;
    }

    SesqMap operator-() const;
    SesqMap& operator+=(const SesqMap& o);
    friend SesqMap operator+(SesqMap a, const SesqMap& b) { return a += b; }
    friend SesqMap operator-(SesqMap a, const SesqMap& b) { return a += -b; }
    SesqMap scaled(const Rat& c) const;

    friend bool operator==(const SesqMap& a, const SesqMap& b) {
        return a.sources == b.sources && a.target == b.target && a.degree == b.degree &&
               a.table == b.table;
    }
    friend bool operator!=(const SesqMap& a, const SesqMap& b) { return !(a == b); }
};

// iterate all basis tuples of the sources (empty arity yields nothing useful)
std::vector<std::vector<int>> all_tuples(const std::vector<ConfModule>& sources);

// same table over rank-compatible replacement modules
SesqMap reframe(const SesqMap& map, std::vector<ConfModule> sources, ConfModule target);

Poly lambda_var(const VarCtx& ctx, int i);  // i-th lambda variable as a Poly

// Evaluate `map` on module values whose coefficients may involve the lambda
// variables of `out`, with the map's own k-th lambda parameter specialized to
// the linear form `params[k]` (a rational combination of out's lambdas; zero
// allowed). This single primitive implements conformal sesquilinearity:
// nested composites such as the value of a bracket acting with parameter
// l1+l2 are evaluated by passing the appropriate forms.
ModValue eval(const SesqMap& map, const std::vector<ModValue>& args,
              const std::vector<Poly>& params, const VarCtx& out);

// fast path: arguments are plain basis elements
ModValue eval_basis(const SesqMap& map, const std::vector<int>& tuple,
                    const std::vector<Poly>& params, const VarCtx& out);

// left action of the basis element x of the acting module on v, with a fresh
// lambda parameter named `lambda_name`: D-powers in v transport as D + lambda
ModValue transport_left(int x_index, const ModValue& v, const SesqMap& action,
                        const std::string& lambda_name);

// right action of v on the basis element x with the action parameter
// specialized to the linear form `param`: D-powers in v transport as -param
ModValue transport_right(const ModValue& v, int x_index, const SesqMap& action,
                         const Poly& param);

// [x_l y] = -[y_{-D-l} x] as a literal polynomial substitution, on all pairs
bool check_skew(const SesqMap& bracket);

}  // namespace leibconf
