#include "bindet/ansatz.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace bindet;

TEST_CASE("sys1 solution matches the cofactor-quotient definition") {
    for (long s : {2L, 3L})
        for (long n = s; n <= 6; ++n) {
            CAPTURE(s, n);
            Matrix at = build_biglemma1_tilde(s, n);
            CofactorRatioVector c = solve_sys1(s, n);
            CHECK(c.at(1) == RatFunc(1));
            RatFunc c11 = cofactor(at, 1, 1);
            for (long j = 1; j <= n; ++j)
                CHECK(c.at(j) == cofactor(at, 1, static_cast<std::size_t>(j)) / c11);
        }
}

TEST_CASE("sys1 2x2 spec example") {
    CofactorRatioVector c = solve_sys1(2, 2);
    Matrix at = build_biglemma1_tilde(2, 2);
    CHECK(c.at(1) == RatFunc(1));
    CHECK(c.at(2) == cofactor(at, 1, 2) / cofactor(at, 1, 1));
}

TEST_CASE("uniqueness under row permutation") {
    long s = 3, n = 5;
    Matrix at = build_biglemma1_tilde(s, n);
    CofactorRatioVector base = solve_sys1(s, n);
    // permute the equations i = 2..n and re-solve by hand
    std::vector<long> order{4, 2, 5, 3};
    Matrix block(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
    std::vector<RatFunc> rhs;
    for (std::size_t e = 0; e < order.size(); ++e) {
        for (long j = 2; j <= n; ++j)
            block(e + 1, static_cast<std::size_t>(j - 1)) =
                at(static_cast<std::size_t>(order[e]), static_cast<std::size_t>(j));
        rhs.push_back(-at(static_cast<std::size_t>(order[e]), 1));
    }
    auto x = block.solve(rhs);
    for (long j = 2; j <= n; ++j) CHECK(x[static_cast<std::size_t>(j - 2)] == base.at(j));
}

TEST_CASE("ansatz identities hold with zero residual on matching parities") {
    // the uniform ratios are claimed for (s,n) = (2r,2m) and (2r+1,2m+1)
    for (long s = 2; s <= 4; ++s)
        for (long n = std::max<long>(2, s); n <= 7; n += 1) {
            if ((n - s) % 2 != 0) continue;
            CAPTURE(s, n);
            auto v = verify_ansatz_identity(AnsatzIdentity::Biglemma1, s, n);
            CHECK(v.ok);
            CHECK(v.residual.is_zero());
        }
    for (long m = 1; m <= 3; ++m) {
        CAPTURE(m);
        CHECK(verify_ansatz_identity(AnsatzIdentity::QuoED1, 0, 2 * m + 1).ok);
    }
    for (long s = 2; s <= 4; ++s)
        for (long n = s + 2; n <= 8; n += 2) {
            CAPTURE(s, n);
            CHECK(verify_ansatz_identity(AnsatzIdentity::Biglemma2, s, n).ok);
            CHECK(verify_ansatz_identity(AnsatzIdentity::Sys2Appendix, s, n).ok);
        }
    for (long n = 2; n <= 5; ++n) CHECK(verify_ansatz_identity(AnsatzIdentity::Eq3Ansatz, 1, n).ok);
}

TEST_CASE("mismatched parity reports a nonzero residual") {
    auto v = verify_ansatz_identity(AnsatzIdentity::Biglemma1, 2, 3);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.residual.is_zero());
    // the sys2 block can even be singular off the matching parity
    CHECK_THROWS_AS(solve_sys2(2, 5), singular_error);
}

TEST_CASE("checker soundness: perturbed c-vector fails") {
    long s = 2, n = 4;
    CofactorRatioVector c = solve_sys1(s, n);
    c.values[2] = -c.values[2];  // flip one sign
    auto v = verify_ansatz_identity(AnsatzIdentity::Biglemma1, s, n, &c);
    CHECK_FALSE(v.ok);
    CHECK_FALSE(v.residual.is_zero());
}

TEST_CASE("biglemma1 identity matches the direct determinant quotient") {
    for (long r = 1; r <= 2; ++r)
        for (long m = r; m <= 3; ++m) {
            CAPTURE(r, m);
            RatFunc lhs_even = RatFunc(determinant({Family::D, 2 * r, 1, 2 * m})) /
                               RatFunc(determinant_shifted({Family::E, 2 * r - 1, 1, 2 * m - 1},
                                                           Rational(1), Rational(3)));
            CHECK(lhs_even == ratio_formula(RatioId::R_s1, 2 * r, 2 * m));
            RatFunc lhs_odd = RatFunc(determinant({Family::E, 2 * r + 1, 1, 2 * m + 1})) /
                              RatFunc(determinant_shifted({Family::D, 2 * r, 1, 2 * m},
                                                          Rational(1), Rational(3)));
            CHECK(lhs_odd == ratio_formula(RatioId::R_s1, 2 * r + 1, 2 * m + 1));
        }
}

TEST_CASE("guess_recurrence on a constant table") {
    std::map<std::pair<long, long>, Rational> data;
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k) data[{n, k}] = Rational(1);
    auto rec = guess_recurrence(data, {{0, 0}, {0, 1}}, 0, 0);
    REQUIRE(rec.has_value());
    CHECK(rec->annihilates(data));
    // c_{n,k+1} - c_{n,k} = 0 up to scale
    CHECK(rec->coeffs[0][0] + rec->coeffs[1][0] == Rational(0));
}

TEST_CASE("guess_recurrence rejects random noise") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> d(1, 1 << 20);
    std::map<std::pair<long, long>, Rational> data;
    for (long n = 1; n <= 14; ++n)
        for (long k = 1; k <= 14; ++k) data[{n, k}] = Rational(d(rng));
    auto rec = guess_recurrence(data, {{0, 0}, {0, 1}, {1, 0}}, 1, 1);
    CHECK_FALSE(rec.has_value());
}

TEST_CASE("guess_recurrence insufficient data throws") {
    std::map<std::pair<long, long>, Rational> data;
    for (long k = 1; k <= 5; ++k) data[{1, k}] = Rational(k);
    CHECK_THROWS_AS(guess_recurrence(data, {{0, 0}, {0, 1}}, 2, 2), std::invalid_argument);
}

TEST_CASE("sys1 data generation at fixed mu agrees with the symbolic solve") {
    long s = 2;
    Rational mu(7);
    auto data = sys1_data(s, mu, 2, 5);
    for (long n = 2; n <= 5; ++n) {
        CofactorRatioVector c = solve_sys1(s, n);
        for (long j = 1; j <= n; ++j) {
            Rational expect = c.at(j).num().eval(mu) / c.at(j).den().eval(mu);
            CHECK(data.at({n, j}) == expect);
        }
    }
}

// Hidden by default (about two minutes): the genuine order-5 recurrence of
// the sys1 cofactor table at s=2, mu=7 is found from n <= 34 data and
// validates exactly on held-out rows.  Run with: unit_tests "[slow]"
TEST_CASE("order-5 recurrence of the sys1 table from adequate data", "[.][slow]") {
    auto train = sys1_data(2, Rational(7), 2, 34);
    auto held = sys1_data(2, Rational(7), 35, 36);
    std::vector<std::pair<long, long>> sup = {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}};
    auto rec = guess_recurrence(train, sup, 4, 6);
    REQUIRE(rec.has_value());
    auto both = train;
    both.insert(held.begin(), held.end());
    CHECK(rec->annihilates(both));
}

TEST_CASE("recurrence text serialization") {
    RecurrenceAnsatz rec;
    rec.support = {{0, 0}, {0, 1}};
    rec.deg_n = 0;
    rec.deg_k = 0;
    rec.coeffs = {{Rational(1)}, {Rational(-1)}};
    CHECK(rec.str() == "(1) * c[n,k] + (-1) * c[n,k+1]");
}
