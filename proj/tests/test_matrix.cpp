#include "bindet/matrix.hpp"
#include "bindet/pochhammer.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace bindet;

namespace {

// test-only oracle: determinant by cofactor expansion along the first row
RatFunc naive_det(const Matrix& m) {
    if (m.rows() == 0) return RatFunc(1);
    if (m.rows() == 1) return m(1, 1);
    RatFunc acc;
    for (std::size_t j = 1; j <= m.cols(); ++j) {
        RatFunc term = m(1, j) * naive_det(m.submatrix_deleting({1}, {j}));
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, int max_deg) {
    std::uniform_int_distribution<long> c(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    return Matrix::build(n, n, [&](std::size_t, std::size_t) {
        std::vector<Rational> cs;
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) cs.emplace_back(c(rng));
        return RatFunc(Poly::from_coeffs(cs));
    });
}

}  // namespace

TEST_CASE("det basics") {
    Matrix one(1, 1);
    one(1, 1) = RatFunc(Poly::mu() - Poly(1));
    CHECK(one.det() == RatFunc(Poly::mu() - Poly(1)));

    Matrix fig2(2, 2);
    fig2(1, 1) = RatFunc(3);
    fig2(1, 2) = RatFunc(5);
    fig2(2, 1) = RatFunc(4);
    fig2(2, 2) = RatFunc(10);
    CHECK(fig2.det() == RatFunc(10));

    Matrix d00(2, 2);
    d00(1, 1) = RatFunc(2);
    d00(1, 2) = RatFunc(Poly::mu() - Poly(1));
    d00(2, 1) = RatFunc(1);
    d00(2, 2) = RatFunc(Poly::mu() + Poly(1));
    CHECK(d00.det() == naive_det(d00));
    CHECK(d00.det() == RatFunc(Poly::mu() + Poly(3)));

    CHECK(Matrix(0, 0).det() == RatFunc(1));
    CHECK_THROWS(Matrix(2, 3).det());
}

TEST_CASE("bareiss equals cofactor expansion up to 5x5") {
    std::mt19937_64 rng(101);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 6; ++rep) {
            Matrix m = random_matrix(rng, n, 2);
            CHECK(m.det() == naive_det(m));
        }
}

TEST_CASE("laplace expansion against cofactors") {
    std::mt19937_64 rng(555);
    for (std::size_t n = 2; n <= 5; ++n) {
        Matrix m = random_matrix(rng, n, 1);
        RatFunc d = m.det();
        for (std::size_t i = 1; i <= n; ++i) {
            RatFunc acc;
            for (std::size_t j = 1; j <= n; ++j) acc += m(i, j) * cofactor(m, i, j);
            CHECK(acc == d);
        }
    }
}

TEST_CASE("minor_det conventions") {
    std::mt19937_64 rng(9);
    Matrix m = random_matrix(rng, 3, 1);
    CHECK(minor_det(m, {{}, {}}) == m.det());
    CHECK(minor_det(m, {{1, 2, 3}, {1, 2, 3}}) == RatFunc(1));
    CHECK_THROWS(minor_det(m, {{1}, {}}));
}

TEST_CASE("cofactor sign rule") {
    Matrix c(1, 1);
    c(1, 1) = RatFunc(7);
    CHECK(cofactor(c, 1, 1) == RatFunc(1));
    Matrix m(2, 2);
    m(1, 1) = RatFunc(Poly::mu());
    m(1, 2) = RatFunc(2);
    m(2, 1) = RatFunc(3);
    m(2, 2) = RatFunc(5);
    CHECK(cofactor(m, 1, 2) == RatFunc(-3));
    CHECK_THROWS(cofactor(m, 0, 1));
}

TEST_CASE("solve") {
    Matrix id = Matrix::identity(3);
    std::vector<RatFunc> b{RatFunc(Poly::mu()), RatFunc(2), RatFunc(Poly::mu() + Poly(1))};
    CHECK(id.solve(b) == b);

    Matrix diag(2, 2);
    diag(1, 1) = RatFunc(Poly::mu());
    diag(2, 2) = RatFunc(1);
    auto x = diag.solve({RatFunc(Poly::mu()), RatFunc(1)});
    CHECK(x[0] == RatFunc(1));
    CHECK(x[1] == RatFunc(1));

    Matrix sing(2, 2);
    sing(1, 1) = RatFunc(1);
    sing(1, 2) = RatFunc(2);
    sing(2, 1) = RatFunc(2);
    sing(2, 2) = RatFunc(4);
    CHECK_THROWS_AS(sing.solve({RatFunc(1), RatFunc(1)}), singular_error);

    // random solve validated by substitution
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 5; ++rep) {
        Matrix a = random_matrix(rng, 4, 1);
        if (a.det().is_zero()) continue;
        std::vector<RatFunc> rhs;
        for (int i = 0; i < 4; ++i) rhs.push_back(RatFunc(Poly::mu() + Poly(i)));
        auto sol = a.solve(rhs);
        for (std::size_t i = 1; i <= 4; ++i) {
            RatFunc acc;
            for (std::size_t j = 1; j <= 4; ++j) acc += a(i, j) * sol[j - 1];
            CHECK(acc == rhs[i - 1]);
        }
    }
}

TEST_CASE("elementary transforms") {
    ElementaryTransform l(TransformKind::L, 4), r(TransformKind::R, 4), rt(TransformKind::Rtilde, 4);
    CHECK(l.to_matrix().det() == RatFunc(1));
    CHECK(r.to_matrix().det() == RatFunc(1));
    RatFunc drt = rt.to_matrix().det();
    CHECK((drt == RatFunc(1) || drt == RatFunc(-1)));

    CHECK(apply_transform(l, TransformSide::Left, Matrix::identity(4)) == l.to_matrix());

    std::mt19937_64 rng(31337);
    Matrix m = random_matrix(rng, 4, 1);
    Matrix lmr = apply_transform(r, TransformSide::Right, apply_transform(l, TransformSide::Left, m));
    CHECK(lmr.det() == m.det());
    CHECK_THROWS(apply_transform(l, TransformSide::Left, Matrix(3, 3)));
}

TEST_CASE("det multiplicativity on random matrices up to 6x6") {
    std::mt19937_64 rng(2024);
    for (std::size_t n = 2; n <= 6; ++n) {
        Matrix a = random_matrix(rng, n, 1);
        Matrix b = random_matrix(rng, n, 1);
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("djd identity on the binomial array, randomized windows") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> off(-2, 4), size(2, 6);
    auto window = [](long s, long t, long n) {
        if (n <= 0) return RatFunc(1);
        return Matrix::build(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                             [&](std::size_t i, std::size_t j) {
                                 long ii = s + static_cast<long>(i) - 1, jj = t + static_cast<long>(j) - 1;
                                 return RatFunc(gbinom(mu_plus(ii + jj - 4), jj - 1));
                             })
            .det();
    };
    for (int c = 0; c < 12; ++c) {
        long s = off(rng), t = off(rng), n = size(rng);
        RatFunc lhs = window(s, t, n) * window(s + 1, t + 1, n - 2);
        RatFunc rhs = window(s, t, n - 1) * window(s + 1, t + 1, n - 1) -
                      window(s + 1, t, n - 1) * window(s, t + 1, n - 1);
        CHECK(lhs == rhs);
    }
}
