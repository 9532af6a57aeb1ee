#include <doctest.h>

#include "support.hpp"

using namespace dmv;

namespace {
UnitRational ur(long p, long q) { return UnitRational(p, q); }
}

TEST_CASE("rational literal parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-2/4") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_unit_rational("3/2"), ParseError);
    CHECK(to_string(parse_rational("4/8")) == "1/2");
    CHECK(to_string(parse_rational("7/7")) == "1");
}

TEST_CASE("UnitRational canonical form and bounds") {
    UnitRational r(2, 4);
    CHECK(r.num() == 1);
    CHECK(r.den() == 2);
    CHECK_THROWS_AS(UnitRational(3, 2), std::domain_error);
    CHECK_THROWS_AS(UnitRational(-1, 2), std::domain_error);
}

TEST_CASE("mv_add") {
    CHECK(mv_add(ur(1, 2), ur(2, 3)) == UnitRational::one());
    CHECK(mv_add(ur(3, 7), UnitRational::zero()) == ur(3, 7));
    CHECK(mv_add(ur(3, 7), ur(2, 7)) == ur(5, 7));
}

TEST_CASE("mv_neg") {
    CHECK(mv_neg(UnitRational::zero()) == UnitRational::one());
    CHECK(mv_neg(ur(1, 3)) == ur(2, 3));
    CHECK(mv_neg(mv_neg(ur(5, 9))) == ur(5, 9));
}

TEST_CASE("mv_mul_trunc") {
    CHECK(mv_mul_trunc(UnitRational::one(), ur(4, 11)) == ur(4, 11));
    CHECK(mv_mul_trunc(ur(1, 2), ur(1, 2)) == UnitRational::zero());
    CHECK(mv_mul_trunc(ur(3, 4), ur(3, 4)) == ur(1, 2));
}

TEST_CASE("join and meet through the defining MV-expressions") {
    CHECK(mv_join(ur(1, 2), ur(2, 3)) == ur(2, 3));
    CHECK(mv_meet(ur(1, 2), ur(2, 3)) == ur(1, 2));
    CHECK(mv_join(ur(5, 8), ur(5, 8)) == ur(5, 8));
    CHECK(mv_join(UnitRational::zero(), UnitRational::one()) == UnitRational::one());
    CHECK(mv_meet(UnitRational::zero(), UnitRational::one()) == UnitRational::zero());

    RationalRng rng(7);
    for (int i = 0; i < 500; ++i) {
        UnitRational x = rng.unit_rational(30), y = rng.unit_rational(30);
        CHECK(mv_join(x, y) == std::max(x, y));
        CHECK(mv_meet(x, y) == std::min(x, y));
    }
}

TEST_CASE("delta") {
    CHECK(delta(3, ur(1, 2)) == ur(1, 6));
    CHECK(delta(1, ur(4, 5)) == ur(4, 5));
    CHECK(delta(4, UnitRational::one()) == ur(1, 4));
    CHECK(mv_nfold_add(4, delta(4, UnitRational::one())) == UnitRational::one());
    CHECK_THROWS_AS(delta(0, ur(1, 2)), std::domain_error);
}

TEST_CASE("scalar action") {
    CHECK(scalar(UnitRational::one(), ur(3, 8)) == ur(3, 8));
    CHECK(scalar(ur(1, 2), ur(1, 3)) == ur(1, 6));
    UnitRational r = ur(2, 3), q = ur(3, 5), x = ur(5, 7);
    CHECK(scalar(r, scalar(q, x)) == scalar(scalar(r, q), x));
}

TEST_CASE("MV1-MV4 on sampled pairs") {
    RationalRng rng(11);
    for (int i = 0; i < 1000; ++i) {
        UnitRational x = rng.unit_rational(24), y = rng.unit_rational(24), z = rng.unit_rational(24);
        // MV1: commutative monoid with unit 0
        CHECK(mv_add(x, y) == mv_add(y, x));
        CHECK(mv_add(mv_add(x, y), z) == mv_add(x, mv_add(y, z)));
        CHECK(mv_add(x, UnitRational::zero()) == x);
        // MV2: involution
        CHECK(mv_neg(mv_neg(x)) == x);
        // MV3: Chang's axiom
        CHECK(mv_add(mv_neg(mv_add(mv_neg(x), y)), y) == mv_add(mv_neg(mv_add(mv_neg(y), x)), x));
        // MV4: 0* ⊕ x = 0*
        CHECK(mv_add(mv_neg(UnitRational::zero()), x) == mv_neg(UnitRational::zero()));
    }
}

TEST_CASE("DMV1 and DMV2 on sampled values") {
    RationalRng rng(13);
    for (int i = 0; i < 300; ++i) {
        UnitRational x = rng.unit_rational(24);
        for (unsigned long n = 1; n <= 6; ++n) {
            UnitRational d = delta(n, x);
            CHECK(mv_nfold_add(n, d) == x);                      // (DMV1) n δ_n x = x
            CHECK(mv_mul_trunc(d, mv_nfold_add(n - 1, d)) == UnitRational::zero());  // (DMV2)
        }
    }
}

TEST_CASE("scalar matches m-fold sum of delta") {
    RationalRng rng(17);
    for (int i = 0; i < 300; ++i) {
        UnitRational x = rng.unit_rational(24);
        UnitRational r = rng.unit_rational(12);
        unsigned long m = r.num().convert_to<unsigned long>();
        unsigned long n = r.den().convert_to<unsigned long>();
        CHECK(scalar(r, x) == mv_nfold_add(m, delta(n, x)));
    }
}

TEST_CASE("DMV1'-DMV4' module axioms") {
    RationalRng rng(19);
    for (int i = 0; i < 300; ++i) {
        UnitRational x = rng.unit_rational(20), y = rng.unit_rational(20);
        UnitRational r = rng.unit_rational(12), q = rng.unit_rational(12);
        // (DMV1') r(x ⊙ y*) = (rx) ⊙ (ry)*
        CHECK(scalar(r, mv_mul_trunc(x, mv_neg(y))) ==
              mv_mul_trunc(scalar(r, x), mv_neg(scalar(r, y))));
        // (DMV2') (r ⊙ q*)x = (rx) ⊙ (qx)*
        CHECK(scalar(mv_mul_trunc(r, mv_neg(q)), x) ==
              mv_mul_trunc(scalar(r, x), mv_neg(scalar(q, x))));
        // (DMV3') r(qx) = (rq)x
        CHECK(scalar(r, scalar(q, x)) == scalar(scalar(r, q), x));
        // (DMV4') 1x = x
        CHECK(scalar(UnitRational::one(), x) == x);
    }
}
