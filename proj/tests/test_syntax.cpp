#include <doctest.h>

#include "support.hpp"

using namespace dmv;
using dmvtest::GenConfig;
using dmvtest::random_ql;
using dmvtest::random_ratluk;

TEST_CASE("grammar examples desugar to primitive nodes") {
    auto a = parse_ql("nabla(1/2) x0 -> x0");
    CHECK(ast_equal(a, Formula::implies(Formula::nabla(UnitRational(1, 2), Formula::var(0)),
                                        Formula::var(0))));

    auto b = parse_ql("~x0 + x1");
    CHECK(ast_equal(b, Formula::implies(Formula::neg(Formula::neg(Formula::var(0))),
                                        Formula::var(1))));

    auto c = parse_ratluk("delta(3) (x0 * x0)");
    CHECK(ast_equal(c, DFormula::delta_n(3, DFormula::times(DFormula::var(0), DFormula::var(0)))));
}

TEST_CASE("precedence and associativity") {
    // -> is right-associative
    CHECK(ast_equal(parse_ql("x0 -> x1 -> x2"),
                    Formula::implies(Formula::var(0), Formula::implies(Formula::var(1), Formula::var(2)))));
    // * binds tighter than +, + tighter than /\, /\ tighter than \/
    CHECK(ast_equal(parse_ql("x0 + x1 * x2"),
                    Formula::plus(Formula::var(0), Formula::times(Formula::var(1), Formula::var(2)))));
    CHECK(ast_equal(parse_ql("x0 \\/ x1 /\\ x2"),
                    Formula::join(Formula::var(0), Formula::meet(Formula::var(1), Formula::var(2)))));
    CHECK(ast_equal(parse_ql("x0 /\\ x1 + x2"),
                    Formula::meet(Formula::var(0), Formula::plus(Formula::var(1), Formula::var(2)))));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_ql("x0 -> "), SyntaxError);
    CHECK_THROWS_AS(parse_ql("nabla(3/2) x0"), SyntaxError);  // outside [0,1]
    CHECK_THROWS_AS(parse_ql("nabla(1/0) x0"), SyntaxError);  // zero denominator
    CHECK_THROWS_AS(parse_ratluk("delta(0) x0"), SyntaxError);
    CHECK_THROWS_AS(parse_ratluk("nabla(1/2) x0"), SyntaxError);  // wrong language
    CHECK_THROWS_AS(parse_ql("delta(2) x0"), SyntaxError);        // wrong language
    try {
        parse_ql("x0 -> @");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("print/parse round trips") {
    RationalRng rng(23);
    GenConfig cfg{.dim = 3, .max_depth = 5};
    for (int i = 0; i < 100; ++i) {
        auto phi = random_ql(rng, cfg);
        auto reparsed = parse_ql(print(phi));
        CHECK(ast_equal(phi, reparsed));
        CHECK(print(reparsed) == print(phi));

        auto psi = random_ratluk(rng, cfg);
        auto dre = parse_ratluk(print(psi));
        CHECK(ast_equal(psi, dre));
        CHECK(print(dre) == print(psi));
    }
}

TEST_CASE("translation examples") {
    // δ_2 x0 ↦ Δ_{1/2} x0
    auto t1 = translate_i1(DFormula::delta_n(2, DFormula::var(0)));
    CHECK(ast_equal(t1, Formula::delta_r(UnitRational(1, 2), Formula::var(0))));

    // identity on δ-free formulas
    CHECK(ast_equal(translate_i1(DFormula::var(0)), Formula::var(0)));

    // nested: δ_3 δ_2 x0 ↦ Δ_{1/3} Δ_{1/2} x0, value 1/6 at x0 = 1
    auto nested = translate_i1(DFormula::delta_n(3, DFormula::delta_n(2, DFormula::var(0))));
    CHECK(eval_ql(nested, {UnitRational::one()}) == UnitRational(1, 6));

    // Δ_1 x0 translates to something equal to x0
    auto back = translate_i2(Formula::delta_r(UnitRational::one(), Formula::var(0)));
    CHECK(eval_ratluk(back, {UnitRational(1, 3)}) == UnitRational(1, 3));

    // ∇_{1/2} x0 at x0 = 0 has value 1/2 in both languages
    auto nab = Formula::nabla(UnitRational(1, 2), Formula::var(0));
    CHECK(eval_ratluk(translate_i2(nab), {UnitRational::zero()}) == UnitRational(1, 2));

    // Δ_{2/3} x0 as the 2-fold sum of δ_3
    auto d23 = translate_i2(Formula::delta_r(UnitRational(2, 3), Formula::var(0)));
    CHECK(eval_ratluk(d23, {UnitRational::one()}) == UnitRational(2, 3));
    CHECK(eval_ratluk(d23, {UnitRational(1, 2)}) == UnitRational(1, 3));

    // Δ_0 φ is the constant 0
    auto d0 = translate_i2(Formula::delta_r(UnitRational::zero(), Formula::var(0)));
    CHECK(eval_ratluk(d0, {UnitRational(1, 3)}) == UnitRational::zero());
}

TEST_CASE("translations preserve semantics on sampled formulas") {
    RationalRng rng(29);
    GenConfig cfg{.dim = 2, .max_depth = 4};
    for (int i = 0; i < 60; ++i) {
        auto phi = random_ratluk(rng, cfg);
        auto tr = translate_i1(phi);
        auto back = translate_i2(tr);
        for (int k = 0; k < 10; ++k) {
            Valuation v = rng.point(cfg.dim, 12);
            UnitRational expected = eval_ratluk(phi, v);
            CHECK(eval_ql(tr, v) == expected);
            CHECK(eval_ratluk(back, v) == expected);  // round trip
        }
        auto psi = random_ql(rng, cfg);
        auto tr2 = translate_i2(psi);
        for (int k = 0; k < 10; ++k) {
            Valuation v = rng.point(cfg.dim, 12);
            CHECK(eval_ratluk(tr2, v) == eval_ql(psi, v));
        }
    }
}
