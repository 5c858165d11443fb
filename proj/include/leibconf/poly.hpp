#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leibconf/rational.hpp"

namespace leibconf {

// Variable context of a polynomial: the symbol D (the translation generator,
// written ∂ in the usual notation) is always present; lambda variables are an
// ordered list of distinct identifiers.
struct VarCtx {
    std::vector<std::string> lambdas;

    VarCtx() = default;
    explicit VarCtx(std::vector<std::string> ls);

    int nvars() const { return 1 + static_cast<int>(lambdas.size()); }
    int nlambdas() const { return static_cast<int>(lambdas.size()); }
    // index into exponent vectors; 0 is D, lambdas start at 1
    int index_of(const std::string& name) const;  // -1 if absent
    bool has(const std::string& name) const { return index_of(name) >= 0; }

    friend bool operator==(const VarCtx& a, const VarCtx& b) { return a.lambdas == b.lambdas; }
    friend bool operator!=(const VarCtx& a, const VarCtx& b) { return !(a == b); }
};

// canonical lambda names l1..ln
VarCtx canon_lambdas(int n);
VarCtx ctx_union(const VarCtx& a, const VarCtx& b);

using Exp = std::vector<int>;  // exponents, [D, l1, l2, ...]

// Exact multivariate polynomial over the rationals in D and the context's
// lambda variables. Terms are kept sorted in graded-lex order with no zero
// coefficients, so equality is structural.
class Poly {
  public:
    Poly() = default;  // zero in the empty context
    explicit Poly(VarCtx ctx) : ctx_(std::move(ctx)) {}

    static Poly zero(VarCtx ctx) { return Poly(std::move(ctx)); }
    static Poly constant(VarCtx ctx, Rat c);
    static Poly variable(const VarCtx& ctx, const std::string& name);
    static Poly partial(const VarCtx& ctx);  // the monomial D
    static Poly monomial(VarCtx ctx, Exp e, Rat c);

    const VarCtx& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;
    int partial_degree() const;       // max exponent of D, -1 for zero
    int lambda_total_degree() const;  // max total degree in lambda vars, -1 for zero
    const std::vector<std::pair<Exp, Rat>>& terms() const { return terms_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rat& c) const;
    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Simultaneous substitution. Keys name variables of this polynomial ("D"
    // names the D symbol); every assigned value lives in `out`. Unassigned
    // variables must exist in `out` and map to themselves.
    Poly substituted(const std::map<std::string, Poly>& assign, const VarCtx& out) const;
    // context change without renaming
    Poly in_ctx(const VarCtx& out) const { return substituted({}, out); }

    // True iff the polynomial is a rational linear combination of lambda
    // variables (no D, no constant part). Zero counts.
    bool is_lambda_linear_form() const;

    // p(D, l) = sum_j l^j / j! * c_j(D); returns [c_0, c_1, ...] over the
    // lambda-free context, trimmed. Requires exactly one lambda variable.
    std::vector<Poly> lambda_to_jproducts() const;
    static Poly jproducts_to_lambda(const std::vector<Poly>& cs, const VarCtx& out);

    std::string str() const;

  private:
    void normalize();  // sort + combine + drop zeros
    VarCtx ctx_;
    std::vector<std::pair<Exp, Rat>> terms_;  // grlex descending
};

std::string monomial_str(const VarCtx& ctx, const Exp& e);

}  // namespace leibconf
