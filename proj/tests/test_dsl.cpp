#include <doctest.h>

#include "leibconf/dsl.hpp"
#include "leibconf/fixtures.hpp"
#include "leibconf/frontend.hpp"

using namespace leibconf;

TEST_CASE("an inline algebra matches the programmatic table") {
    dsl::Program p = dsl::parse("module g { basis L } bracket { [L,L] = (D + 2*l) L }");
    REQUIRE(p.maps.size() == 1);
    const SesqMap& br = p.maps.begin()->second;
    const VarCtx ctx = br.lambda_ctx();
    ModValue expect(br.target, ctx);
    expect.coeffs[0] = Poly::partial(ctx) + lambda_var(ctx, 0).scaled(Rat(2));
    CHECK(br.entry_or_zero({0, 0}) == expect);
    CHECK(br.entry_or_zero({0, 0}).coeffs ==
          fixtures::virasoro().bracket.entry_or_zero({0, 0}).coeffs);
}

TEST_CASE("an empty module is the zero module") {
    dsl::Program p = dsl::parse("module z { }");
    CHECK(p.modules.at("z").rank() == 0);
}

TEST_CASE("undeclared basis names are reported at the offending token") {
    try {
        dsl::parse("module g { basis L }\nbracket { [L, L] = (D) X; }");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
        CHECK(e.span.line == 2);
        CHECK(std::string(e.what()).find("'X'") != std::string::npos);
    }
}

TEST_CASE("lexical errors carry positions") {
    try {
        dsl::parse("module g %");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
        CHECK(e.span.line == 1);
        CHECK(e.span.col == 10);
    }
}

TEST_CASE("expression grammar") {
    auto bracket_entry = [](const std::string& rhs) {
        dsl::Program p = dsl::parse("module g { basis L }\nbracket { [L, L] = " + rhs + "; }");
        return p.maps.begin()->second.entry_or_zero({0, 0});
    };
    const VarCtx ctx = canon_lambdas(1);
    Poly l = lambda_var(ctx, 0), d = Poly::partial(ctx);

    // the power binds tighter than the sign
    ModValue a = bracket_entry("-l1^2 L");
    CHECK(a.coeffs[0] == -(l * l));
    // parenthesized signs, rationals, juxtaposition
    CHECK(bracket_entry("(-l1)^2 L").coeffs[0] == l * l);
    CHECK(bracket_entry("1/2 D L - 1/2 L D").coeffs[0].is_zero());
    CHECK(bracket_entry("(D + l1)(D - l1) L").coeffs[0] == d * d - l * l);
    CHECK(bracket_entry("0").is_zero());
    CHECK(bracket_entry("3 L - 3 L").is_zero());

    CHECK_THROWS_AS(bracket_entry("L L"), dsl::ParseError);
    CHECK_THROWS_AS(bracket_entry("L + D"), dsl::ParseError);
    CHECK_THROWS_AS(bracket_entry("L^2"), dsl::ParseError);
}

TEST_CASE("declared variable names are normalized to the canonical ones") {
    dsl::Program p = dsl::parse(
        "module g { basis L }\n"
        "map f : g, g -> g vars(mu) { [L, L] = (3 mu) L; }\n");
    const SesqMap& f = p.maps.at("f");
    const VarCtx ctx = f.lambda_ctx();
    CHECK(ctx.lambdas == std::vector<std::string>{"l1"});
    CHECK(f.entry_or_zero({0, 0}).coeffs[0] == lambda_var(ctx, 0).scaled(Rat(3)));
}

TEST_CASE("parse of print is the identity on the zoo") {
    for (const auto& [name, text] : fixture_files()) {
        CAPTURE(name);
        dsl::Program p = dsl::parse(text);
        std::string canon = dsl::print(p);
        dsl::Program q = dsl::parse(canon);
        CHECK(p == q);
        CHECK(dsl::print(q) == canon);
    }
}

TEST_CASE("duplicate declarations are rejected") {
    CHECK_THROWS_AS(dsl::parse("module g { basis a }\nmodule g { basis b }"), dsl::ParseError);
}

TEST_CASE("module sums concatenate bases") {
    dsl::Program p = dsl::parse(
        "module a { basis x }\nmodule b { basis y }\nmodule c = a ++ b;\n");
    CHECK(p.modules.at("c").basis == std::vector<std::string>{"x", "y"});
}
