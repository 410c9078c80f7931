#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spanres/errors.hpp"
#include "spanres/matrix.hpp"

#include <random>
#include <vector>

using spanres::ExactMatrix;
using spanres::Rational;

namespace {

ExactMatrix from_ints(std::vector<std::vector<long long>> rows) {
    const size_t r = rows.size();
    const size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rows[i][j]);
    return m;
}

// Diagonal a, off-diagonal b.
ExactMatrix uniform_matrix(size_t n, const Rational& a, const Rational& b) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = i == j ? a : b;
    return m;
}

ExactMatrix random_int_matrix(std::mt19937_64& rng, size_t n, long long lo, long long hi) {
    ExactMatrix m(n, n);
    const auto span = static_cast<unsigned long long>(hi - lo + 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(lo + static_cast<long long>(rng() % span));
    return m;
}

// Cofactor expansion, the independent determinant route for small n.
Rational det_cofactor(const ExactMatrix& m) {
    const size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational sum(0);
    for (size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t col = 0;
            for (size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, col++) = m.at(i, k);
            }
        }
        Rational term = m.at(0, j) * det_cofactor(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(spanres::det_exact(ExactMatrix::identity(3)) == Rational(1));

    // Uniform 3x3 with a=4, b=1: (a + 2b)(a - b)^2 = 6 * 9.
    CHECK(spanres::det_exact(uniform_matrix(3, Rational(4), Rational(1))) == Rational(54));

    // Reduced Laplacian of the 4-cycle; the cycle has exactly 4 spanning
    // trees (drop any one edge).
    ExactMatrix c4 = from_ints({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(spanres::det_exact(c4) == Rational(4));

    CHECK(spanres::det_exact(ExactMatrix(0, 0)) == Rational(1));
    CHECK_THROWS_AS(spanres::det_exact(ExactMatrix(2, 3)), spanres::DimensionError);
}

TEST_CASE("determinant of singular and permuted matrices") {
    CHECK(spanres::det_exact(from_ints({{1, 1}, {1, 1}})) == Rational(0));
    // Zero pivot up front forces a row swap (sign flip).
    CHECK(spanres::det_exact(from_ints({{0, 1}, {1, 0}})) == Rational(-1));
    CHECK(spanres::det_exact(from_ints({{0, 2, 1}, {1, 0, 0}, {0, 0, 3}})) == Rational(-6));
}

TEST_CASE("determinant with rational entries") {
    ExactMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(1, 4);
    m.at(1, 1) = Rational(1, 5);
    CHECK(spanres::det_exact(m) == Rational(1, 60));
}

TEST_CASE("uniform-matrix determinant identity") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const size_t n = 1 + rng() % 6;
        const Rational a(static_cast<long long>(rng() % 19) - 9);
        const Rational b(static_cast<long long>(rng() % 19) - 9);
        const Rational expected = (a + Rational(static_cast<long long>(n) - 1) * b) *
                                  (a - b).pow(static_cast<long long>(n) - 1);
        CHECK(spanres::det_exact(uniform_matrix(n, a, b)) == expected);
    }
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const size_t n = 1 + rng() % 5;
        ExactMatrix m = random_int_matrix(rng, n, -6, 6);
        CHECK(spanres::det_exact(m) == det_cofactor(m));
    }
}

TEST_CASE("solve basics") {
    std::vector<Rational> b{Rational(5), Rational(-1, 2)};
    CHECK(spanres::solve_exact(ExactMatrix::identity(2), b) == b);

    // Cramer by hand: det = 3, x = (2/3, 1/3).
    ExactMatrix a = from_ints({{2, -1}, {-1, 2}});
    std::vector<Rational> rhs{Rational(1), Rational(0)};
    std::vector<Rational> x = spanres::solve_exact(a, rhs);
    CHECK(x == std::vector<Rational>{Rational(2, 3), Rational(1, 3)});

    CHECK_THROWS_AS(spanres::solve_exact(from_ints({{1, 1}, {1, 1}}), rhs),
                    spanres::SingularSystemError);
    CHECK_THROWS_AS(spanres::solve_exact(from_ints({{1, 2, 3}, {4, 5, 6}}), rhs),
                    spanres::DimensionError);
    std::vector<Rational> bad{Rational(1)};
    CHECK_THROWS_AS(spanres::solve_exact(a, bad), spanres::DimensionError);
}

TEST_CASE("solve residual is exactly zero") {
    std::mt19937_64 rng(31);
    int solved = 0;
    while (solved < 30) {
        const size_t n = 1 + rng() % 6;
        ExactMatrix a = random_int_matrix(rng, n, -5, 5);
        std::vector<Rational> b(n);
        for (size_t i = 0; i < n; ++i)
            b[i] = Rational(static_cast<long long>(rng() % 21) - 10,
                            1 + static_cast<long long>(rng() % 4));
        std::vector<Rational> x;
        try {
            x = spanres::solve_exact(a, b);
        } catch (const spanres::SingularSystemError&) {
            continue;
        }
        ++solved;
        for (size_t i = 0; i < n; ++i) {
            Rational acc(0);
            for (size_t j = 0; j < n; ++j) acc += a.at(i, j) * x[j];
            CHECK(acc == b[i]);
        }
    }
}

TEST_CASE("schur determinant") {
    // 1x1 blocks: det [[a,b],[c,d]] = ad - bc.
    ExactMatrix a = from_ints({{3}});
    ExactMatrix b = from_ints({{4}});
    ExactMatrix c = from_ints({{5}});
    ExactMatrix d = from_ints({{7}});
    CHECK(spanres::schur_det(a, b, c, d) == Rational(1));

    // Reduced Laplacian blocks of the contracted K_{3,3} with s=t=1:
    // [[3I2, -J],[-J, 3I2]]; value matches (sn+tm-st) m^{n-t-1} n^{m-s-1} = 45.
    ExactMatrix a2 = from_ints({{3, 0}, {0, 3}});
    ExactMatrix ones = from_ints({{-1, -1}, {-1, -1}});
    CHECK(spanres::schur_det(a2, ones, ones, a2) == Rational(45));

    CHECK_THROWS_AS(spanres::schur_det(a2, ones, ones, from_ints({{1, 1}, {1, 1}})),
                    spanres::SingularSystemError);
    CHECK_THROWS_AS(spanres::schur_det(from_ints({{1, 2}}), ones, ones, a2),
                    spanres::DimensionError);
    CHECK_THROWS_AS(spanres::schur_det(a2, from_ints({{1}, {1}}), ones, from_ints({{1}})),
                    spanres::DimensionError);
}

TEST_CASE("schur route equals direct determinant") {
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 40) {
        ExactMatrix m = random_int_matrix(rng, 4, -5, 5);
        ExactMatrix a(2, 2), b(2, 2), c(2, 2), d(2, 2);
        for (size_t i = 0; i < 2; ++i) {
            for (size_t j = 0; j < 2; ++j) {
                a.at(i, j) = m.at(i, j);
                b.at(i, j) = m.at(i, j + 2);
                c.at(i, j) = m.at(i + 2, j);
                d.at(i, j) = m.at(i + 2, j + 2);
            }
        }
        if (spanres::det_exact(d).is_zero()) continue;
        ++done;
        CHECK(spanres::schur_det(a, b, c, d) == spanres::det_exact(m));
    }
}

TEST_CASE("results stay canonical") {
    ExactMatrix a = from_ints({{2, 0}, {0, 4}});
    std::vector<Rational> x = spanres::solve_exact(a, {Rational(1), Rational(2)});
    CHECK(x[0].den() > spanres::BigInt(0));
    CHECK(x[1] == Rational(1, 2));
    CHECK(spanres::BigInt::gcd(x[1].num(), x[1].den()).is_one());
}
