#include "leibconf/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace leibconf {

VarCtx::VarCtx(std::vector<std::string> ls) : lambdas(std::move(ls)) {
    std::set<std::string> seen;
    for (const auto& l : lambdas) {
        if (l == "D") throw error("\"D\" is reserved and cannot name a lambda variable");
        if (l.empty()) throw error("empty variable name");
        if (!seen.insert(l).second) throw error("duplicate lambda variable: " + l);
    }
}

int VarCtx::index_of(const std::string& name) const {
    if (name == "D") return 0;
    for (size_t i = 0; i < lambdas.size(); ++i)
        if (lambdas[i] == name) return static_cast<int>(i) + 1;
    return -1;
}

VarCtx canon_lambdas(int n) {
    std::vector<std::string> ls;
    ls.reserve(n);
    for (int i = 1; i <= n; ++i) ls.push_back("l" + std::to_string(i));
    return VarCtx(std::move(ls));
}

VarCtx ctx_union(const VarCtx& a, const VarCtx& b) {
    std::vector<std::string> ls = a.lambdas;
    for (const auto& l : b.lambdas)
        if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
    return VarCtx(std::move(ls));
}

namespace {

int total_degree(const Exp& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// graded-lex, descending store order: higher total degree first, then lex
bool grlex_greater(const Exp& a, const Exp& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return grlex_greater(a.first, b.first); });
    std::vector<std::pair<Exp, Rat>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Poly Poly::constant(VarCtx ctx, Rat c) {
    Poly p(std::move(ctx));
    if (!c.is_zero()) p.terms_.push_back({Exp(p.ctx_.nvars(), 0), std::move(c)});
    return p;
}

Poly Poly::variable(const VarCtx& ctx, const std::string& name) {
    int i = ctx.index_of(name);
    if (i < 0) throw error("unknown variable: " + name);
    Exp e(ctx.nvars(), 0);
    e[i] = 1;
    return monomial(ctx, std::move(e), Rat(1));
}

Poly Poly::partial(const VarCtx& ctx) { return variable(ctx, "D"); }

Poly Poly::monomial(VarCtx ctx, Exp e, Rat c) {
    if (static_cast<int>(e.size()) != ctx.nvars()) throw error("exponent vector length mismatch");
    Poly p(std::move(ctx));
    if (!c.is_zero()) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
}

Rat Poly::constant_term() const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == 0) return c;
    return Rat(0);
}

int Poly::partial_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0]);
    return d;
}

int Poly::lambda_total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e) - e[0]);
    return d;
}

Poly Poly::operator-() const {
    Poly p(ctx_);
    p.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) p.terms_.push_back({e, -c});
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (ctx_ != o.ctx_) throw error("variable contexts differ");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.ctx_ != b.ctx_) throw error("variable contexts differ");
    Poly p(a.ctx_);
    p.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exp e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            p.terms_.push_back({std::move(e), ca * cb});
        }
    p.normalize();
    return p;
}

Poly Poly::scaled(const Rat& c) const {
    if (c.is_zero()) return Poly(ctx_);
    Poly p(ctx_);
    p.terms_.reserve(terms_.size());
    for (const auto& [e, k] : terms_) p.terms_.push_back({e, k * c});
    return p;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw error("negative polynomial power");
    Poly r = Poly::constant(ctx_, Rat(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::substituted(const std::map<std::string, Poly>& assign, const VarCtx& out) const {
    for (const auto& [name, value] : assign) {
        if (!ctx_.has(name)) throw error("substitution of unknown variable: " + name);
        if (value.ctx() != out) throw error("substitution value not in output context");
    }
    // image of each variable of this context
    std::vector<Poly> image(ctx_.nvars());
    for (int i = 0; i < ctx_.nvars(); ++i) {
        const std::string name = i == 0 ? std::string("D") : ctx_.lambdas[i - 1];
        auto it = assign.find(name);
        if (it != assign.end())
            image[i] = it->second;
        else
            image[i] = Poly::variable(out, name);  // throws if absent from `out`
    }
    // cache powers per variable
    std::vector<std::vector<Poly>> powers(ctx_.nvars());
    auto power = [&](int i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(out, Rat(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * image[i]);
        return cache[e];
    };
    Poly result(out);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(out, c);
        for (int i = 0; i < ctx_.nvars(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        result += term;
    }
    return result;
}

bool Poly::is_lambda_linear_form() const {
    for (const auto& [e, c] : terms_)
        if (e[0] != 0 || total_degree(e) != 1) return false;
    return true;
}

std::vector<Poly> Poly::lambda_to_jproducts() const {
    if (ctx_.nlambdas() != 1) throw error("jproducts need exactly one lambda variable");
    VarCtx dctx;  // D only
    int maxj = -1;
    for (const auto& [e, c] : terms_) maxj = std::max(maxj, e[1]);
    std::vector<Poly> cs(maxj + 1, Poly(dctx));
    for (const auto& [e, c] : terms_) {
        int j = e[1];
        cs[j] += Poly::monomial(dctx, Exp{e[0]}, c * Rat::factorial(j));
    }
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    return cs;
}

Poly Poly::jproducts_to_lambda(const std::vector<Poly>& cs, const VarCtx& out) {
    if (out.nlambdas() != 1) throw error("output context needs exactly one lambda variable");
    Poly p(out);
    Poly l = Poly::variable(out, out.lambdas[0]);
    for (size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].ctx().nlambdas() != 0) throw error("jproduct coefficients must be D-only");
        Rat inv_fact = Rat(1) / Rat::factorial(static_cast<unsigned>(j));
        p += cs[j].in_ctx(out) * l.pow(static_cast<int>(j)).scaled(inv_fact);
    }
    return p;
}

std::string monomial_str(const VarCtx& ctx, const Exp& e) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << (i == 0 ? "D" : ctx.lambdas[i - 1]);
        if (e[i] > 1) os << "^" << e[i];
    }
    return os.str();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string mono = monomial_str(ctx_, e);
        if (mono.empty())
            os << a.str();
        else if (a.is_one())
            os << mono;
        else
            os << a.str() << "*" << mono;
    }
    return os.str();
}

}  // namespace leibconf
