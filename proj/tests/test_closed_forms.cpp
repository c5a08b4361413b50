#include "bindet/closed_forms.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace bindet;

TEST_CASE("detwithnoKD") {
    CHECK(cf_detwithnoKD(0, 1, 1) == RatFunc(Poly::mu() - Poly(1)));
    CHECK(cf_detwithnoKD(0, 1, 1) == RatFunc(determinant({Family::B, 0, 1, 1})));
    CHECK(cf_detwithnoKD(3, 0, 4) == RatFunc(1));  // empty product
    CHECK(cf_detwithnoKD(1, 1, 2) == RatFunc(determinant({Family::B, 1, 1, 2})));
}

TEST_CASE("E11 compact form") {
    CHECK(cf_E11(1) == RatFunc(Poly::mu() - Poly(1)));
    for (long m = 1; m <= 4; ++m) {
        CAPTURE(m);
        CHECK(cf_E11(m) == RatFunc(determinant({Family::E, 1, 1, 2 * m - 1})));
    }
    // sign alternates as (-1)^(m-1)
    for (long m = 1; m <= 4; ++m) {
        RatFunc v = cf_E11(m);
        CHECK(v.num().leading().sign() == parity_sign(m - 1));
    }
}

TEST_CASE("Es0 closed forms against direct determinants") {
    for (long m = 1; m <= 4; ++m)
        for (long r = 0; r < m; ++r) {
            CAPTURE(m, r);
            CHECK(cf_Es0(Es0Variant::EvenZero, m, r).is_zero());
            CHECK(determinant({Family::E, 2 * r, 0, 2 * m - 1}).is_zero());
            CHECK(cf_Es0(Es0Variant::Even, m, r) == RatFunc(determinant({Family::E, 2 * r, 0, 2 * m})));
            CHECK(cf_Es0(Es0Variant::OddDim, m, r) ==
                  RatFunc(determinant({Family::E, 2 * r + 1, 0, 2 * m - 1})));
            CHECK(cf_Es0(Es0Variant::EvenDim, m, r) ==
                  RatFunc(determinant({Family::E, 2 * r + 1, 0, 2 * m})));
        }
    // spec instances
    CHECK(cf_Es0(Es0Variant::OddDim, 1, 0) == RatFunc(1));
    CHECK(cf_Es0(Es0Variant::Even, 1, 0) == RatFunc(-(Poly::mu() - Poly(1))));
    CHECK_THROWS(cf_Es0(Es0Variant::Even, 1, 1));
}

TEST_CASE("Krat37nice and KTConj20 examples") {
    CHECK(cf_Krat37nice(1, 1) == RatFunc(Poly::mu() - Poly(1)));
    CHECK(cf_KTConj20(1, 1) ==
          RatFunc((Poly::mu() - Poly(1)) * (Poly::mu() + Poly(2)) * Poly(Rational(1, 2))));
    for (long m = 1; m <= 3; ++m)
        for (long r = 1; r <= m; ++r) {
            CAPTURE(m, r);
            CHECK(cf_Krat37nice(m, r) == RatFunc(determinant({Family::E, 2 * r - 1, 1, 2 * m - 1})));
            CHECK(cf_KTConj20(m, r) == RatFunc(determinant({Family::D, 2 * r, 1, 2 * m})));
        }
    CHECK_THROWS(cf_Krat37nice(1, 2));
}

TEST_CASE("Krat37ugly equals switch prefactor times Krat37nice") {
    for (auto [m, r] : {std::pair<long, long>{2, 1}, {3, 2}, {2, 2}, {3, 1}}) {
        CAPTURE(m, r);
        RatFunc rhs = cf_Krat37nice(m, r);
        if (r >= 2) rhs *= switch_prefactor(1, 2 * r - 1, 2 * m - 1);
        CHECK(cf_Krat37ugly(m, r) == rhs);
        CHECK(cf_Krat37ugly(m, r) == RatFunc(determinant({Family::E, 1, 2 * r - 1, 2 * m - 1})));
    }
}

TEST_CASE("Eneg1CF and ktconj21 against direct determinants") {
    for (long m = 1; m <= 3; ++m)
        for (long r = 1; r <= m; ++r) {
            CAPTURE(m, r);
            CHECK(cf_Eneg1CF(m, r) == RatFunc(determinant({Family::E, -1, 2 * r - 1, 2 * m + 1})));
        }
    for (long m = 1; m <= 3; ++m)
        for (long r = 0; r < m; ++r) {
            CAPTURE(m, r);
            CHECK(cf_ktconj21(m, r) == RatFunc(determinant({Family::D, -1, 2 * r, 2 * m})));
        }
    CHECK_THROWS(cf_ktconj21(2, 2));
}

TEST_CASE("cancelpoch identity") {
    for (long m = 1; m <= 10; ++m) {
        CAPTURE(m);
        CHECK(cancelpoch_lhs(m) == cancelpoch_rhs(m));
    }
}

TEST_CASE("ratio closed forms") {
    // quoED1 at m = 1
    RatFunc expect(-(Poly::mu() - Poly(3)),
                   Poly::mu() * (Poly::mu() - Poly(1)) * (Poly::mu() + Poly(1)));
    CHECK(cf_quoED1(1) == expect);
    // EDCor1 at m = 1 reduces to -2mu/(mu+2)
    CHECK(cf_EDCor1(1) == RatFunc(Poly(Rational(-2)) * Poly::mu(), Poly::mu() + Poly(2)));
    // EDCor checks against determinant quotients
    for (long m = 1; m <= 3; ++m) {
        CAPTURE(m);
        RatFunc lhs1 = RatFunc(determinant({Family::E, 1, 1, 2 * m})) /
                       RatFunc(determinant_shifted({Family::D, 0, 1, 2 * m - 1}, Rational(1), Rational(3)));
        CHECK(lhs1 == cf_EDCor1(m));
        RatFunc lhs2 = RatFunc(determinant({Family::E, 2, 2, 2 * m + 1})) /
                       RatFunc(determinant_shifted({Family::D, 1, 2, 2 * m}, Rational(1), Rational(3)));
        CHECK(lhs2 == cf_EDCor2(m));
    }
}

TEST_CASE("triangle ratios at a sample point") {
    long m = 3, r = 1;
    auto det_of = [](Family f, long s, long t, long n) { return RatFunc(determinant({f, s, t, n})); };
    CHECK(det_of(Family::E, 2, 1, 7) / det_of(Family::E, 2, 1, 6) == cf_triangle(TriangleId::E1_1, m, r));
    CHECK(det_of(Family::E, 2, 1, 7) / det_of(Family::E, 3, 1, 6) == cf_triangle(TriangleId::E1_2, m, r));
    CHECK(det_of(Family::E, 3, 1, 6) / det_of(Family::E, 2, 1, 6) == cf_triangle(TriangleId::E1_3, m, r));
    CHECK(det_of(Family::D, 1, 1, 6) / det_of(Family::D, 1, 1, 5) == cf_triangle(TriangleId::D1_1, m, r));
    CHECK(det_of(Family::D, 2, 1, 5) / det_of(Family::D, 1, 1, 6) == cf_triangle(TriangleId::D1_2, m, r));
    CHECK(det_of(Family::D, 2, 1, 5) / det_of(Family::D, 1, 1, 5) == cf_triangle(TriangleId::D1_3, m, r));
    CHECK(det_of(Family::E, -1, 2, 6) / det_of(Family::E, -1, 2, 5) == cf_triangle(TriangleId::Eneg1_1, m, r));
    CHECK(det_of(Family::E, -1, 2, 6) / det_of(Family::E, -1, 1, 6) == cf_triangle(TriangleId::Eneg1_2, m, r));
    CHECK(det_of(Family::E, -1, 1, 6) / det_of(Family::E, -1, 2, 5) == cf_triangle(TriangleId::Eneg1_3, m, r));
    CHECK(det_of(Family::D, -1, 3, 7) / det_of(Family::D, -1, 3, 6) == cf_triangle(TriangleId::Dneg1_1, m, r));
    CHECK(det_of(Family::D, -1, 3, 7) / det_of(Family::D, -1, 2, 7) == cf_triangle(TriangleId::Dneg1_2, m, r));
    CHECK(det_of(Family::D, -1, 2, 7) / det_of(Family::D, -1, 3, 6) == cf_triangle(TriangleId::Dneg1_3, m, r));
    // precondition checks
    CHECK_THROWS(cf_triangle(TriangleId::E1_1, 2, 2));
    CHECK_THROWS(cf_triangle(TriangleId::Eneg1_1, 2, 1));
}

TEST_CASE("KTConj24 reciprocity") {
    for (long m = 1; m <= 2; ++m)
        for (long r = 1; r <= m; ++r) {
            CAPTURE(m, r);
            CHECK(determinant({Family::D, 2 * r - 1, 0, 2 * m + 1}) == cf_KTConj24_rhs(Family::D, m, r));
            CHECK(determinant({Family::E, 2 * r - 1, 0, 2 * m + 1}) == cf_KTConj24_rhs(Family::E, m, r));
        }
}

TEST_CASE("registry is enumerable and evaluates") {
    const auto& reg = closed_form_registry();
    CHECK(reg.size() >= 25);
    for (const auto& entry : reg) {
        if (entry.id == "Es0-even-zero") CHECK(entry.eval(3, 1).is_zero());
        if (entry.id == "E11") CHECK(entry.eval(1, 0) == RatFunc(Poly::mu() - Poly(1)));
    }
}
