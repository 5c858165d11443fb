#include "leibconf/dsl.hpp"

#include <cctype>
#include <sstream>
#include <variant>

namespace leibconf::dsl {

bool Program::operator==(const Program& o) const {
    auto decl_eq = [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return false;
        for (const auto& [k, v] : a) {
            auto it = b.find(k);
            if (it == b.end() || !(it->second == v)) return false;
        }
        return true;
    };
    return order == o.order && decl_eq(modules, o.modules) &&
           decl_eq(module_sums, o.module_sums) && decl_eq(gradeds, o.gradeds) &&
           decl_eq(graded_parts, o.graded_parts) && decl_eq(maps, o.maps) &&
           decl_eq(algebras, o.algebras) && decl_eq(reps, o.reps) &&
           decl_eq(cochains, o.cochains) && decl_eq(twoterms, o.twoterms) &&
           decl_eq(homs, o.homs) && decl_eq(crosseds, o.crosseds) &&
           decl_eq(twoalgs, o.twoalgs) && decl_eq(opsdecls, o.opsdecls) &&
           decl_eq(lcochains, o.lcochains);
}

namespace {

enum class Tok {
    ident,
    number,
    lbrace,
    rbrace,
    lparen,
    rparen,
    lbrack,
    rbrack,
    comma,
    semi,
    colon,
    arrow,
    plus,
    plusplus,
    minus,
    star,
    caret,
    slash,
    eq,
    eof
};

struct Token {
    Tok kind;
    std::string text;
    Span span;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) {}

    Token next() {
        skip_ws();
        Span sp{line_, col_};
        if (pos_ >= s_.size()) return {Tok::eof, "", sp};
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t b = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                    s_[pos_] == '.'))
                advance();
            return {Tok::ident, s_.substr(b, pos_ - b), sp};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t b = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                advance();
            return {Tok::number, s_.substr(b, pos_ - b), sp};
        }
        advance();
        switch (c) {
            case '{': return {Tok::lbrace, "{", sp};
            case '}': return {Tok::rbrace, "}", sp};
            case '(': return {Tok::lparen, "(", sp};
            case ')': return {Tok::rparen, ")", sp};
            case '[': return {Tok::lbrack, "[", sp};
            case ']': return {Tok::rbrack, "]", sp};
            case ',': return {Tok::comma, ",", sp};
            case ';': return {Tok::semi, ";", sp};
            case ':': return {Tok::colon, ":", sp};
            case '=': return {Tok::eq, "=", sp};
            case '^': return {Tok::caret, "^", sp};
            case '/': return {Tok::slash, "/", sp};
            case '*': return {Tok::star, "*", sp};
            case '+':
                if (pos_ < s_.size() && s_[pos_] == '+') {
                    advance();
                    return {Tok::plusplus, "++", sp};
                }
                return {Tok::plus, "+", sp};
            case '-':
                if (pos_ < s_.size() && s_[pos_] == '>') {
                    advance();
                    return {Tok::arrow, "->", sp};
                }
                return {Tok::minus, "-", sp};
            default: throw ParseError(sp, std::string("unexpected character '") + c + "'");
        }
    }

  private:
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

using Value = std::variant<Poly, ModValue>;

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

    Program parse_file() {
        Program p;
        while (cur_.kind != Tok::eof) {
            const Token kw = expect_ident("declaration keyword");
            if (kw.text == "module")
                parse_module(p);
            else if (kw.text == "map" || kw.text == "bracket")
                parse_map(p, kw.text == "bracket");
            else if (kw.text == "algebra")
                parse_algebra(p);
            else if (kw.text == "rep")
                parse_rep(p);
            else if (kw.text == "cochain")
                parse_cochain(p);
            else if (kw.text == "twoterm")
                parse_twoterm(p);
            else if (kw.text == "hom")
                parse_hom(p);
            else if (kw.text == "crossed")
                parse_crossed(p);
            else if (kw.text == "twoalg")
                parse_twoalg(p);
            else if (kw.text == "graded")
                parse_graded(p);
            else if (kw.text == "ops")
                parse_ops(p);
            else if (kw.text == "lcochain")
                parse_lcochain(p);
            else
                throw ParseError(kw.span, "unknown declaration '" + kw.text + "'");
        }
        return p;
    }

  private:
    // ---- token plumbing ----
    Token take() {
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }
    bool at(Tok k) const { return cur_.kind == k; }
    bool at_ident(const char* word) const { return at(Tok::ident) && cur_.text == word; }
    Token expect(Tok k, const std::string& what) {
        if (!at(k)) throw ParseError(cur_.span, "expected " + what + ", got '" + cur_.text + "'");
        return take();
    }
    Token expect_ident(const std::string& what) { return expect(Tok::ident, what); }
    void expect_word(const char* word) {
        Token t = expect_ident(std::string("'") + word + "'");
        if (t.text != word)
            throw ParseError(t.span, std::string("expected '") + word + "', got '" + t.text + "'");
    }
    int expect_int() {
        bool neg = false;
        if (at(Tok::minus)) {
            take();
            neg = true;
        }
        Token t = expect(Tok::number, "an integer");
        int v = std::stoi(t.text);
        return neg ? -v : v;
    }

    std::vector<std::string> ident_list() {
        std::vector<std::string> names;
        if (!at(Tok::ident)) return names;
        names.push_back(take().text);
        while (at(Tok::comma)) {
            take();
            names.push_back(expect_ident("a name").text);
        }
        return names;
    }

    // ---- name resolution ----
    const ConfModule& resolve_module(const Program& p, const Token& t) const {
        if (auto it = p.modules.find(t.text); it != p.modules.end()) return it->second;
        if (auto it = p.gradeds.find(t.text); it != p.gradeds.end()) return it->second.flat;
        throw ParseError(t.span, "unknown module '" + t.text + "'");
    }
    const SesqMap& resolve_map(const Program& p, const Token& t) const {
        auto it = p.maps.find(t.text);
        if (it == p.maps.end()) throw ParseError(t.span, "unknown map '" + t.text + "'");
        return it->second;
    }
    template <class M>
    const typename M::mapped_type& resolve_in(const M& m, const Token& t,
                                              const char* what) const {
        auto it = m.find(t.text);
        if (it == m.end())
            throw ParseError(t.span, std::string("unknown ") + what + " '" + t.text + "'");
        return it->second;
    }
    void declare(Program& p, const std::string& kind, const Token& name) {
        for (const auto& [k, n] : p.order)
            if (n == name.text) throw ParseError(name.span, "duplicate name '" + name.text + "'");
        p.order.push_back({kind, name.text});
    }

    // ---- expressions ----
    Value parse_primary(const VarCtx& ctx, const ConfModule& target) {
        if (at(Tok::minus)) {
            take();
            Value v = parse_factor(ctx, target);  // the power binds tighter than the sign
            if (std::holds_alternative<Poly>(v)) return -std::get<Poly>(v);
            return -std::get<ModValue>(v);
        }
        if (at(Tok::number)) {
            Token n = take();
            if (at(Tok::slash)) {
                take();
                Token d = expect(Tok::number, "a denominator");
                return Poly::constant(ctx, Rat::from_string(n.text + "/" + d.text));
            }
            return Poly::constant(ctx, Rat::from_string(n.text));
        }
        if (at(Tok::lparen)) {
            take();
            Value v = parse_expr(ctx, target);
            expect(Tok::rparen, "')'");
            return v;
        }
        if (at(Tok::ident)) {
            Token t = take();
            std::string name = t.text;
            if (name == "l" && !ctx.has("l") && ctx.has("l1")) name = "l1";  // convenience alias
            if (name == "D" || ctx.has(name)) return Poly::variable(ctx, name);
            int b = target.basis_index(name);
            if (b >= 0) return ModValue::basis_unit(target, b, ctx);
            throw ParseError(t.span, "unknown symbol '" + t.text + "'");
        }
        throw ParseError(cur_.span, "expected a term, got '" + cur_.text + "'");
    }

    Value parse_factor(const VarCtx& ctx, const ConfModule& target) {
        Value v = parse_primary(ctx, target);
        while (at(Tok::caret)) {
            Token op = take();
            int e = expect_int();
            if (!std::holds_alternative<Poly>(v))
                throw ParseError(op.span, "cannot raise a module element to a power");
            if (e < 0) throw ParseError(op.span, "negative powers are not supported");
            v = std::get<Poly>(v).pow(e);
        }
        return v;
    }

    static Value mul(const Value& a, const Value& b, Span sp) {
        if (std::holds_alternative<Poly>(a) && std::holds_alternative<Poly>(b))
            return std::get<Poly>(a) * std::get<Poly>(b);
        if (std::holds_alternative<Poly>(a))
            return std::get<ModValue>(b).scaled(std::get<Poly>(a));
        if (std::holds_alternative<Poly>(b))
            return std::get<ModValue>(a).scaled(std::get<Poly>(b));
        throw ParseError(sp, "cannot multiply two module elements");
    }

    bool starts_primary() const {
        return at(Tok::ident) || at(Tok::number) || at(Tok::lparen);
    }

    Value parse_term(const VarCtx& ctx, const ConfModule& target) {
        Value v = parse_factor(ctx, target);
        while (true) {
            if (at(Tok::star)) {
                Span sp = take().span;
                v = mul(v, parse_factor(ctx, target), sp);
            } else if (starts_primary()) {
                Span sp = cur_.span;
                v = mul(v, parse_factor(ctx, target), sp);
            } else {
                break;
            }
        }
        return v;
    }

    Value parse_expr(const VarCtx& ctx, const ConfModule& target) {
        Value v = parse_term(ctx, target);
        while (at(Tok::plus) || at(Tok::minus)) {
            Token op = take();
            Value w = parse_term(ctx, target);
            const bool sub = op.kind == Tok::minus;
            if (std::holds_alternative<Poly>(v) && std::holds_alternative<Poly>(w)) {
                v = sub ? std::get<Poly>(v) - std::get<Poly>(w)
                        : std::get<Poly>(v) + std::get<Poly>(w);
            } else if (std::holds_alternative<ModValue>(v) &&
                       std::holds_alternative<ModValue>(w)) {
                v = sub ? std::get<ModValue>(v) - std::get<ModValue>(w)
                        : std::get<ModValue>(v) + std::get<ModValue>(w);
            } else if (std::holds_alternative<Poly>(v) && std::get<Poly>(v).is_zero()) {
                v = sub ? Value(-std::get<ModValue>(w)) : Value(std::get<ModValue>(w));
            } else if (std::holds_alternative<Poly>(w) && std::get<Poly>(w).is_zero()) {
                // adding zero changes nothing
            } else {
                throw ParseError(op.span, "cannot add a scalar and a module element");
            }
        }
        return v;
    }

    ModValue expr_as_value(const VarCtx& ctx, const ConfModule& target, Span sp) {
        Value v = parse_expr(ctx, target);
        if (std::holds_alternative<ModValue>(v)) return std::get<ModValue>(v);
        if (std::get<Poly>(v).is_zero()) return ModValue::zero(target, ctx);
        throw ParseError(sp, "entry must be a module element (or 0)");
    }

    // ---- declarations ----
    void parse_module(Program& p) {
        Token name = expect_ident("a module name");
        declare(p, "module", name);
        if (at(Tok::eq)) {
            take();
            Token a = expect_ident("a module name");
            Token b_kw = expect(Tok::plusplus, "'++'");
            (void)b_kw;
            Token b = expect_ident("a module name");
            expect(Tok::semi, "';'");
            const ConfModule& ma = resolve_module(p, a);
            const ConfModule& mb = resolve_module(p, b);
            p.modules.emplace(name.text, direct_sum(name.text, ma, mb));
            p.module_sums.emplace(name.text, std::pair{a.text, b.text});
            return;
        }
        expect(Tok::lbrace, "'{'");
        std::vector<std::string> basis;
        if (at_ident("basis")) {
            take();
            basis = ident_list();
            if (at(Tok::semi)) take();
        }
        expect(Tok::rbrace, "'}'");
        try {
            p.modules.emplace(name.text, ConfModule(name.text, std::move(basis)));
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }
    }

    void parse_map(Program& p, bool bracket_sugar) {
        Token name{Tok::ident, "", cur_.span};
        const bool anonymous =
            bracket_sugar && (at(Tok::lbrace) || at_ident("on") || at_ident("vars"));
        if (!anonymous) name = expect_ident("a map name");
        if (name.text.empty()) name.text = "bracket" + std::to_string(p.maps.size() + 1);
        declare(p, "map", name);
        std::vector<ConfModule> sources;
        ConfModule target;
        if (bracket_sugar) {
            ConfModule mod;
            if (at_ident("on")) {
                take();
                mod = resolve_module(p, expect_ident("a module name"));
            } else {
                if (p.modules.size() != 1)
                    throw ParseError(name.span,
                                     "an anonymous bracket needs exactly one module in scope");
                mod = p.modules.begin()->second;
            }
            sources = {mod, mod};
            target = mod;
        } else {
            expect(Tok::colon, "':'");
            Token first = expect_ident("a module name");
            sources.push_back(resolve_module(p, first));
            while (at(Tok::comma)) {
                take();
                sources.push_back(resolve_module(p, expect_ident("a module name")));
            }
            expect(Tok::arrow, "'->'");
            target = resolve_module(p, expect_ident("a module name"));
        }
        const int arity = static_cast<int>(sources.size());

        std::vector<std::string> var_names;
        int degree = 0;
        while (at(Tok::ident) && (cur_.text == "vars" || cur_.text == "degree")) {
            if (at_ident("vars")) {
                take();
                expect(Tok::lparen, "'('");
                var_names = ident_list();
                expect(Tok::rparen, "')'");
            } else {
                take();
                degree = expect_int();
            }
        }
        if (var_names.empty())
            for (int i = 1; i < arity; ++i) var_names.push_back("l" + std::to_string(i));
        if (static_cast<int>(var_names.size()) != arity - 1)
            throw ParseError(name.span, "an arity-" + std::to_string(arity) + " map needs " +
                                            std::to_string(arity - 1) + " lambda variables");
        VarCtx surface;
        try {
            surface = VarCtx(var_names);
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }

        SesqMap map(sources, target, degree);
        expect(Tok::lbrace, "'{'");
        while (!at(Tok::rbrace)) {
            Token open = expect(Tok::lbrack, "'['");
            std::vector<int> tuple;
            for (int i = 0; i < arity; ++i) {
                if (i) expect(Tok::comma, "','");
                Token b = expect_ident("a basis name");
                int idx = sources[i].basis_index(b.text);
                if (idx < 0)
                    throw ParseError(b.span, "'" + b.text + "' is not a basis name of " +
                                                 sources[i].name);
                tuple.push_back(idx);
            }
            expect(Tok::rbrack, "']'");
            expect(Tok::eq, "'='");
            ModValue v = expr_as_value(surface, target, open.span);
            if (at(Tok::semi))
                take();
            else if (!at(Tok::rbrace))
                expect(Tok::semi, "';'");
            // normalize surface variables to the canonical names
            const VarCtx canon = map.lambda_ctx();
            std::map<std::string, Poly> rename;
            for (int i = 0; i + 1 < arity; ++i)
                rename[surface.lambdas[i]] = lambda_var(canon, i);
            try {
                map.set_entry(tuple, map.entry_or_zero(tuple) + v.substituted(rename, canon));
            } catch (const error& e) {
                throw ParseError(open.span, e.what());
            }
        }
        expect(Tok::rbrace, "'}'");
        p.maps.emplace(name.text, std::move(map));
    }

    // small helper for `key value ;` fields inside blocks
    Token field(const char* key) {
        expect_word(key);
        Token v = expect_ident("a name");
        expect(Tok::semi, "';'");
        return v;
    }

    void parse_algebra(Program& p) {
        Token name = expect_ident("an algebra name");
        declare(p, "algebra", name);
        expect(Tok::lbrace, "'{'");
        Token m = field("module");
        Token b = field("bracket");
        expect(Tok::rbrace, "'}'");
        const ConfModule& mod = resolve_module(p, m);
        const SesqMap& br = resolve_map(p, b);
        if (br.sources != std::vector<ConfModule>{mod, mod} || br.target != mod)
            throw ParseError(b.span, "bracket must be a binary endomorphic map on " + m.text);
        p.algebras.emplace(name.text,
                           Program::AlgebraDecl{m.text, b.text, raw_leibniz_alg(mod, br)});
    }

    void parse_rep(Program& p) {
        Token name = expect_ident("a representation name");
        declare(p, "rep", name);
        expect(Tok::lbrace, "'{'");
        Token a = field("algebra");
        Token m = field("module");
        Token l = field("left");
        Token r = field("right");
        expect(Tok::rbrace, "'}'");
        const auto& alg = resolve_in(p.algebras, a, "algebra");
        const ConfModule& mod = resolve_module(p, m);
        const SesqMap& left = resolve_map(p, l);
        const SesqMap& right = resolve_map(p, r);
        if (left.sources != std::vector<ConfModule>{alg.value.mod, mod} || left.target != mod)
            throw ParseError(l.span, "left action must map g ⊗ M -> M");
        if (right.sources != std::vector<ConfModule>{mod, alg.value.mod} || right.target != mod)
            throw ParseError(r.span, "right action must map M ⊗ g -> M");
        p.reps.emplace(name.text, Program::RepDecl{a.text, m.text, l.text, r.text,
                                                   raw_rep(alg.value, mod, left, right)});
    }

    void parse_cochain(Program& p) {
        Token name = expect_ident("a cochain name");
        declare(p, "cochain", name);
        expect(Tok::lbrace, "'{'");
        Token r = field("rep");
        expect_word("degree");
        int degree = expect_int();
        expect(Tok::semi, "';'");
        const auto& rep = resolve_in(p.reps, r, "representation");
        Program::CochainDecl decl;
        decl.rep = r.text;
        if (at_ident("map")) {
            Token m = field("map");
            const SesqMap& map = resolve_map(p, m);
            decl.map = m.text;
            if (map.arity() != degree)
                throw ParseError(m.span, "cochain map arity must equal the degree");
            try {
                decl.value = cochain_from_map(rep.value, map);
            } catch (const error& e) {
                throw ParseError(m.span, e.what());
            }
        } else {
            expect_word("value");
            expect(Tok::lparen, "'('");
            std::vector<Rat> vals;
            if (!at(Tok::rparen)) {
                vals.push_back(parse_rat());
                while (at(Tok::comma)) {
                    take();
                    vals.push_back(parse_rat());
                }
            }
            expect(Tok::rparen, "')'");
            expect(Tok::semi, "';'");
            if (degree != 0)
                throw ParseError(name.span, "literal values are only for degree-0 cochains");
            try {
                decl.value = c0_cochain(rep.value, std::move(vals));
            } catch (const error& e) {
                throw ParseError(name.span, e.what());
            }
        }
        expect(Tok::rbrace, "'}'");
        p.cochains.emplace(name.text, std::move(decl));
    }

    Rat parse_rat() {
        bool neg = false;
        if (at(Tok::minus)) {
            take();
            neg = true;
        }
        Token n = expect(Tok::number, "a rational");
        std::string text = n.text;
        if (at(Tok::slash)) {
            take();
            text += "/" + expect(Tok::number, "a denominator").text;
        }
        Rat v = Rat::from_string(text);
        return neg ? -v : v;
    }

    void parse_twoterm(Program& p) {
        Token name = expect_ident("a name");
        declare(p, "twoterm", name);
        expect(Tok::lbrace, "'{'");
        Token g0 = field("g0"), g1 = field("g1"), d = field("d"), r00 = field("rho2_00"),
              r01 = field("rho2_01"), r10 = field("rho2_10"), r3 = field("rho3");
        expect(Tok::rbrace, "'}'");
        try {
            TwoTermAlg a = two_term(resolve_module(p, g0), resolve_module(p, g1),
                                    resolve_map(p, d), resolve_map(p, r00), resolve_map(p, r01),
                                    resolve_map(p, r10), resolve_map(p, r3));
            p.twoterms.emplace(name.text,
                               Program::TwoTermDecl{g0.text, g1.text, d.text, r00.text, r01.text,
                                                    r10.text, r3.text, std::move(a)});
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }
    }

    void parse_hom(Program& p) {
        Token name = expect_ident("a name");
        declare(p, "hom", name);
        expect(Tok::lbrace, "'{'");
        Token from = field("from"), to = field("to"), f0 = field("f0"), f1 = field("f1"),
              f2 = field("f2");
        expect(Tok::rbrace, "'}'");
        const auto& a = resolve_in(p.twoterms, from, "two-term structure");
        const auto& b = resolve_in(p.twoterms, to, "two-term structure");
        try {
            TwoTermHom h = two_term_hom(a.value, b.value, resolve_map(p, f0),
                                        resolve_map(p, f1), resolve_map(p, f2));
            p.homs.emplace(name.text, Program::HomDecl{from.text, to.text, f0.text, f1.text,
                                                       f2.text, std::move(h)});
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }
    }

    void parse_crossed(Program& p) {
        Token name = expect_ident("a name");
        declare(p, "crossed", name);
        expect(Tok::lbrace, "'{'");
        Token g = field("g"), h = field("h"), d = field("d"), pl = field("phil"),
              pr = field("phir");
        expect(Tok::rbrace, "'}'");
        try {
            CrossedModule x = crossed_module(resolve_in(p.algebras, g, "algebra").value,
                                             resolve_in(p.algebras, h, "algebra").value,
                                             resolve_map(p, d), resolve_map(p, pl),
                                             resolve_map(p, pr));
            p.crosseds.emplace(name.text, Program::CrossedDecl{g.text, h.text, d.text, pl.text,
                                                               pr.text, std::move(x)});
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }
    }

    void parse_twoalg(Program& p) {
        Token name = expect_ident("a name");
        declare(p, "twoalg", name);
        expect(Tok::lbrace, "'{'");
        Token c0 = field("c0"), k = field("kernel"), d = field("d"), b0 = field("bracket0"),
              b1 = field("bracket1"), lk = field("leibnizator");
        expect(Tok::rbrace, "'}'");
        try {
            TwoVectorSpace v = two_vs_from_complex(resolve_map(p, d));
            if (v.c0 != resolve_module(p, c0) || v.k != resolve_module(p, k))
                throw error("c0/kernel do not match the differential");
            const SesqMap& raw1 = resolve_map(p, b1);
            SesqMap br1 = reframe(raw1, {v.c1, v.c1}, v.c1);
            TwoAlg a = two_alg(v, resolve_map(p, b0), std::move(br1), resolve_map(p, lk));
            p.twoalgs.emplace(name.text, Program::TwoAlgDecl{c0.text, k.text, d.text, b0.text,
                                                             b1.text, lk.text, std::move(a)});
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }
    }

    void parse_graded(Program& p) {
        Token name = expect_ident("a name");
        declare(p, "graded", name);
        expect(Tok::lbrace, "'{'");
        std::map<int, ConfModule> comps;
        std::vector<std::pair<int, std::string>> parts;
        while (at_ident("component")) {
            take();
            int deg = expect_int();
            Token m = expect_ident("a module name");
            expect(Tok::semi, "';'");
            if (comps.count(deg))
                throw ParseError(m.span, "duplicate component degree " + std::to_string(deg));
            comps.emplace(deg, resolve_module(p, m));
            parts.push_back({deg, m.text});
        }
        expect(Tok::rbrace, "'}'");
        try {
            p.gradeds.emplace(name.text, GradedModule(name.text, std::move(comps)));
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }
        p.graded_parts.emplace(name.text, std::move(parts));
    }

    void parse_ops(Program& p) {
        Token name = expect_ident("a name");
        declare(p, "ops", name);
        expect(Tok::lbrace, "'{'");
        Token g = field("graded");
        expect_word("flavor");
        Token fl = expect_ident("'shifted' or 'unshifted'");
        if (fl.text != "shifted" && fl.text != "unshifted")
            throw ParseError(fl.span, "flavor must be 'shifted' or 'unshifted'");
        expect(Tok::semi, "';'");
        const bool shifted = fl.text == "shifted";
        const auto& graded = resolve_in(p.gradeds, g, "graded module");
        std::map<int, SesqMap> pieces;
        std::vector<std::pair<int, std::string>> names;
        while (at_ident("op")) {
            take();
            int arity = expect_int();
            Token m = expect_ident("a map name");
            expect(Tok::semi, "';'");
            if (pieces.count(arity))
                throw ParseError(m.span, "duplicate arity " + std::to_string(arity));
            const int want = shifted ? -1 : arity - 2;
            pieces.emplace(arity, with_degree(resolve_map(p, m), want));
            names.push_back({arity, m.text});
        }
        expect(Tok::rbrace, "'}'");
        try {
            HomotopyOps ops = make_homotopy_ops(
                shifted ? HomotopyOps::Flavor::shifted : HomotopyOps::Flavor::unshifted, graded,
                std::move(pieces));
            p.opsdecls.emplace(name.text,
                               Program::OpsDecl{g.text, shifted, std::move(names), std::move(ops)});
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }
    }

    void parse_lcochain(Program& p) {
        Token name = expect_ident("a name");
        declare(p, "lcochain", name);
        expect(Tok::lbrace, "'{'");
        Token o = field("ops");
        expect_word("degree");
        int degree = expect_int();
        expect(Tok::semi, "';'");
        const auto& ops = resolve_in(p.opsdecls, o, "operation tower");
        std::map<int, SesqMap> pieces;
        std::vector<std::pair<int, std::string>> names;
        while (at_ident("piece")) {
            take();
            int arity = expect_int();
            Token m = expect_ident("a map name");
            expect(Tok::semi, "';'");
            if (pieces.count(arity))
                throw ParseError(m.span, "duplicate arity " + std::to_string(arity));
            pieces.emplace(arity, with_degree(resolve_map(p, m), 1 - degree));
            names.push_back({arity, m.text});
        }
        expect(Tok::rbrace, "'}'");
        try {
            // cochains live on the shifted module; tables are reinterpreted
            GradedModule base = ops.value.flavor == HomotopyOps::Flavor::shifted
                                    ? ops.value.mod
                                    : ops.value.mod.suspended(1);
            ConvElem v = make_conv_elem(base, 1 - degree, std::move(pieces));
            p.lcochains.emplace(name.text, Program::LCochainDecl{o.text, degree,
                                                                 std::move(names), std::move(v)});
        } catch (const error& e) {
            throw ParseError(name.span, e.what());
        }
    }

    Lexer lex_;
    Token cur_;
};

}  // namespace

Program parse(const std::string& text) { return Parser(text).parse_file(); }

namespace {

std::string entry_str(const ModValue& v) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < v.mod.rank(); ++i) {
        if (v.coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << v.coeffs[i].str() << ") " << v.mod.basis[i];
    }
    if (first) os << "0";
    return os.str();
}

void print_map_into(std::ostream& os, const std::string& name, const SesqMap& m) {
    os << "map " << name << " : ";
    for (int i = 0; i < m.arity(); ++i) os << (i ? ", " : "") << m.sources[i].name;
    os << " -> " << m.target.name;
    if (m.arity() > 1) {
        os << " vars(";
        const VarCtx c = m.lambda_ctx();
        for (int i = 0; i < c.nlambdas(); ++i) os << (i ? ", " : "") << c.lambdas[i];
        os << ")";
    }
    if (m.degree != 0) os << " degree " << m.degree;
    os << " {\n";
    for (const auto& [tuple, value] : m.table) {
        os << "  [";
        for (size_t i = 0; i < tuple.size(); ++i)
            os << (i ? ", " : "") << m.sources[i].basis[tuple[i]];
        os << "] = " << entry_str(value) << ";\n";
    }
    os << "}\n";
}

void print_module_into(std::ostream& os, const std::string& name, const ConfModule& m) {
    os << "module " << name << " {";
    if (!m.basis.empty()) {
        os << " basis ";
        for (size_t i = 0; i < m.basis.size(); ++i) os << (i ? ", " : "") << m.basis[i];
        os << ";";
    }
    os << " }\n";
}

}  // namespace

std::string print_module(const std::string& name, const ConfModule& m) {
    std::ostringstream os;
    print_module_into(os, name, m);
    return os.str();
}

std::string print_map(const std::string& name, const SesqMap& m) {
    std::ostringstream os;
    print_map_into(os, name, m);
    return os.str();
}

std::string print(const Program& p) {
    std::ostringstream os;
    for (const auto& [kind, name] : p.order) {
        if (kind == "module") {
            if (auto it = p.module_sums.find(name); it != p.module_sums.end()) {
                os << "module " << name << " = " << it->second.first << " ++ "
                   << it->second.second << ";\n";
            } else {
                print_module_into(os, name, p.modules.at(name));
            }
        } else if (kind == "map") {
            print_map_into(os, name, p.maps.at(name));
        } else if (kind == "algebra") {
            const auto& d = p.algebras.at(name);
            os << "algebra " << name << " { module " << d.module << "; bracket " << d.bracket
               << "; }\n";
        } else if (kind == "rep") {
            const auto& d = p.reps.at(name);
            os << "rep " << name << " { algebra " << d.algebra << "; module " << d.module
               << "; left " << d.left << "; right " << d.right << "; }\n";
        } else if (kind == "cochain") {
            const auto& d = p.cochains.at(name);
            os << "cochain " << name << " { rep " << d.rep << "; degree " << d.value.degree
               << "; ";
            if (d.value.degree == 0) {
                os << "value (";
                for (size_t i = 0; i < d.value.c0.size(); ++i)
                    os << (i ? ", " : "") << d.value.c0[i].str();
                os << ");";
            } else {
                os << "map " << d.map << ";";
            }
            os << " }\n";
        } else if (kind == "twoterm") {
            const auto& d = p.twoterms.at(name);
            os << "twoterm " << name << " { g0 " << d.g0 << "; g1 " << d.g1 << "; d " << d.d
               << "; rho2_00 " << d.r00 << "; rho2_01 " << d.r01 << "; rho2_10 " << d.r10
               << "; rho3 " << d.r3 << "; }\n";
        } else if (kind == "hom") {
            const auto& d = p.homs.at(name);
            os << "hom " << name << " { from " << d.from << "; to " << d.to << "; f0 " << d.f0
               << "; f1 " << d.f1 << "; f2 " << d.f2 << "; }\n";
        } else if (kind == "crossed") {
            const auto& d = p.crosseds.at(name);
            os << "crossed " << name << " { g " << d.g << "; h " << d.h << "; d " << d.d
               << "; phil " << d.phil << "; phir " << d.phir << "; }\n";
        } else if (kind == "twoalg") {
            const auto& d = p.twoalgs.at(name);
            os << "twoalg " << name << " { c0 " << d.c0 << "; kernel " << d.kernel << "; d "
               << d.d << "; bracket0 " << d.br0 << "; bracket1 " << d.br1 << "; leibnizator "
               << d.lk << "; }\n";
        } else if (kind == "graded") {
            os << "graded " << name << " {";
            for (const auto& [deg, mod] : p.graded_parts.at(name))
                os << " component " << deg << " " << mod << ";";
            os << " }\n";
        } else if (kind == "ops") {
            const auto& d = p.opsdecls.at(name);
            os << "ops " << name << " { graded " << d.graded << "; flavor "
               << (d.shifted ? "shifted" : "unshifted") << ";";
            for (const auto& [arity, mod] : d.pieces) os << " op " << arity << " " << mod << ";";
            os << " }\n";
        } else if (kind == "lcochain") {
            const auto& d = p.lcochains.at(name);
            os << "lcochain " << name << " { ops " << d.ops << "; degree " << d.degree << ";";
            for (const auto& [arity, mod] : d.pieces)
                os << " piece " << arity << " " << mod << ";";
            os << " }\n";
        }
    }
    return os.str();
}

std::string print_algebra(const std::string& name, const LeibnizConfAlg& alg) {
    std::ostringstream os;
    print_module_into(os, alg.mod.name, alg.mod);
    print_map_into(os, name + "_bracket", alg.bracket);
    os << "algebra " << name << " { module " << alg.mod.name << "; bracket " << name
       << "_bracket; }\n";
    return os.str();
}

std::string print_rep(const std::string& name, const ConfRep& rep) {
    std::ostringstream os;
    os << print_algebra(name + "_alg", rep.alg);
    if (rep.mod.name != rep.alg.mod.name) print_module_into(os, rep.mod.name, rep.mod);
    print_map_into(os, name + "_left", rep.left);
    print_map_into(os, name + "_right", rep.right);
    os << "rep " << name << " { algebra " << name << "_alg; module " << rep.mod.name << "; left "
       << name << "_left; right " << name << "_right; }\n";
    return os.str();
}

std::string print_cochain(const std::string& name, const std::string& rep_name, const Cochain& c,
                          bool with_rep) {
    std::ostringstream os;
    (void)with_rep;
    os << "cochain " << name << " { rep " << rep_name << "; degree " << c.degree << "; ";
    if (c.degree == 0) {
        os << "value (";
        for (size_t i = 0; i < c.c0.size(); ++i) os << (i ? ", " : "") << c.c0[i].str();
        os << ");";
    } else {
        os << "map " << name << "_map;";
    }
    os << " }\n";
    std::string head;
    if (c.degree > 0) head = print_map(name + "_map", *c.map);
    return head + os.str();
}

std::string print_two_term(const std::string& name, const TwoTermAlg& a) {
    std::ostringstream os;
    print_module_into(os, a.g0.name, a.g0);
    if (a.g1.name != a.g0.name) print_module_into(os, a.g1.name, a.g1);
    print_map_into(os, name + "_d", a.d);
    print_map_into(os, name + "_r00", a.r2_00);
    print_map_into(os, name + "_r01", a.r2_01);
    print_map_into(os, name + "_r10", a.r2_10);
    print_map_into(os, name + "_r3", a.r3);
    os << "twoterm " << name << " { g0 " << a.g0.name << "; g1 " << a.g1.name << "; d " << name
       << "_d; rho2_00 " << name << "_r00; rho2_01 " << name << "_r01; rho2_10 " << name
       << "_r10; rho3 " << name << "_r3; }\n";
    return os.str();
}

std::string print_crossed(const std::string& name, const CrossedModule& x) {
    std::ostringstream os;
    print_module_into(os, x.g.mod.name, x.g.mod);
    if (x.h.mod.name != x.g.mod.name) print_module_into(os, x.h.mod.name, x.h.mod);
    print_map_into(os, name + "_gbr", x.g.bracket);
    print_map_into(os, name + "_hbr", x.h.bracket);
    os << "algebra " << name << "_g { module " << x.g.mod.name << "; bracket " << name
       << "_gbr; }\n";
    os << "algebra " << name << "_h { module " << x.h.mod.name << "; bracket " << name
       << "_hbr; }\n";
    print_map_into(os, name + "_d", x.d);
    print_map_into(os, name + "_phil", x.phi_l);
    print_map_into(os, name + "_phir", x.phi_r);
    os << "crossed " << name << " { g " << name << "_g; h " << name << "_h; d " << name
       << "_d; phil " << name << "_phil; phir " << name << "_phir; }\n";
    return os.str();
}

std::string print_two_alg(const std::string& name, const TwoAlg& a) {
    std::ostringstream os;
    print_module_into(os, a.v.c0.name, a.v.c0);
    if (a.v.k.name != a.v.c0.name) print_module_into(os, a.v.k.name, a.v.k);
    os << "module " << a.v.c1.name << " = " << a.v.c0.name << " ++ " << a.v.k.name << ";\n";
    print_map_into(os, name + "_d", a.v.d);
    print_map_into(os, name + "_br0", a.br0);
    print_map_into(os, name + "_br1", a.br1);
    print_map_into(os, name + "_lk", a.lk);
    os << "twoalg " << name << " { c0 " << a.v.c0.name << "; kernel " << a.v.k.name << "; d "
       << name << "_d; bracket0 " << name << "_br0; bracket1 " << name << "_br1; leibnizator "
       << name << "_lk; }\n";
    return os.str();
}

std::string print_ops(const std::string& name, const HomotopyOps& ops) {
    std::ostringstream os;
    for (const auto& [deg, mod] : ops.mod.components) print_module_into(os, mod.name, mod);
    os << "graded " << ops.mod.flat.name << " {";
    for (const auto& [deg, mod] : ops.mod.components)
        os << " component " << deg << " " << mod.name << ";";
    os << " }\n";
    for (const auto& [arity, map] : ops.ops)
        print_map_into(os, name + "_op" + std::to_string(arity), map);
    os << "ops " << name << " { graded " << ops.mod.flat.name << "; flavor "
       << (ops.flavor == HomotopyOps::Flavor::shifted ? "shifted" : "unshifted") << ";";
    for (const auto& [arity, map] : ops.ops)
        os << " op " << arity << " " << name << "_op" << arity << ";";
    os << " }\n";
    return os.str();
}

}  // namespace leibconf::dsl
