#include <doctest.h>

#include "leibconf/poly.hpp"
#include "leibconf/randgen.hpp"

using namespace leibconf;

namespace {

Poly rp(Rng& rng, const VarCtx& ctx) { return random_poly(rng, ctx, 3, 3, 4); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
    VarCtx ctx({"l"});
    Poly d = Poly::partial(ctx);
    Poly l = Poly::variable(ctx, "l");

    CHECK(d + l.scaled(Rat(2)) + l.scaled(Rat(-2)) == d);
    CHECK((d + l) * (d - l) == d * d - l * l);

    VarCtx lm({"l", "m"});
    Poly a = Poly::variable(lm, "l"), b = Poly::variable(lm, "m");
    Poly binom = (a + b) * (a + b) - (a * a + (a * b).scaled(Rat(2)) + b * b);
    CHECK(binom.is_zero());
}

TEST_CASE("context mismatch is rejected") {
    Poly a = Poly::partial(VarCtx({"l"}));
    Poly b = Poly::partial(VarCtx({"m"}));
    CHECK_THROWS_WITH_AS(a + b, "variable contexts differ", error);
    CHECK_THROWS_AS(a * b, error);
}

TEST_CASE("substitution") {
    VarCtx ctx({"l"});
    Poly d = Poly::partial(ctx);
    Poly l = Poly::variable(ctx, "l");

    // l -> -D - l
    Poly img = (d + l.scaled(Rat(2))).substituted({{"l", -d - l}}, ctx);
    CHECK(img == -d - l.scaled(Rat(2)));

    VarCtx lm({"l", "m"});
    Poly a = Poly::variable(lm, "l"), b = Poly::variable(lm, "m");
    CHECK((a * b).substituted({{"l", a + b}}, lm) == a * b + b * b);

    CHECK(d.substituted({}, ctx) == d);
    CHECK_THROWS_AS(d.substituted({{"x", d}}, ctx), error);
}

TEST_CASE("substitution is a ring homomorphism") {
    Rng rng(7);
    VarCtx ctx({"l", "m"});
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = rp(rng, ctx), b = rp(rng, ctx);
        std::map<std::string, Poly> s{{"l", rp(rng, ctx)}, {"D", rp(rng, ctx)}};
        CHECK((a * b).substituted(s, ctx) == a.substituted(s, ctx) * b.substituted(s, ctx));
        CHECK((a + b).substituted(s, ctx) == a.substituted(s, ctx) + b.substituted(s, ctx));
    }
}

TEST_CASE("ring laws on random triples") {
    Rng rng(11);
    VarCtx ctx({"l", "m", "n"});
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = rp(rng, ctx), b = rp(rng, ctx), c = rp(rng, ctx);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("j-th product coefficients") {
    VarCtx ctx({"l"});
    VarCtx dctx;
    Poly d = Poly::partial(ctx);
    Poly l = Poly::variable(ctx, "l");

    // D + 2l = (l^0/0!) D + (l^1/1!) 2
    auto cs = (d + l.scaled(Rat(2))).lambda_to_jproducts();
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == Poly::partial(dctx));
    CHECK(cs[1] == Poly::constant(dctx, Rat(2)));

    CHECK(Poly(ctx).lambda_to_jproducts().empty());

    // l^2 = (l^2/2!) * 2
    auto cs2 = (l * l).lambda_to_jproducts();
    REQUIRE(cs2.size() == 3);
    CHECK(cs2[0].is_zero());
    CHECK(cs2[1].is_zero());
    CHECK(cs2[2] == Poly::constant(dctx, Rat(2)));

    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = rp(rng, ctx);
        CHECK(Poly::jproducts_to_lambda(p.lambda_to_jproducts(), ctx) == p);
    }
}

TEST_CASE("canonical printing") {
    VarCtx ctx({"l"});
    Poly d = Poly::partial(ctx);
    Poly l = Poly::variable(ctx, "l");
    CHECK((d * d - l.scaled(Rat(1, 2))).str() == "D^2 - 1/2*l");
    CHECK(Poly(ctx).str() == "0");
}
