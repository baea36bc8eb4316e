#include "superder/linalg.hpp"
#include "superder/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_int.hpp>

using namespace superder;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols)
{
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.chance(2, 3))
                m(i, j) = rng.small_rational();
    return m;
}

}  // namespace

TEST_CASE("rational parsing is strict and canonical")
{
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
    CHECK(format_rational(Rational(0)) == "0");
    for (const char* bad : {"", "1.5", "1/0", "a", "1/", "/2", "1e3", "2/-3", " 1", "1 "})
        CHECK_FALSE(try_parse_rational(bad).has_value());
}

TEST_CASE("rational arithmetic stays reduced with positive denominator")
{
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = rng.small_rational(), b = rng.small_rational();
        for (const Rational& r : {a + b, a - b, a * b}) {
            const auto num = boost::multiprecision::numerator(r);
            const auto den = boost::multiprecision::denominator(r);
            CHECK(den > 0);
            CHECK(boost::multiprecision::gcd(num, den) == 1);
        }
    }
    // exact field identities, no rounding
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 10) * Rational(10) == 1);
}

TEST_CASE("rref on the frozen examples")
{
    SECTION("identity is its own rref")
    {
        const auto r = rref(Matrix::identity(3));
        CHECK(r.mat == Matrix::identity(3));
        CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
        CHECK(r.rank == 3);
    }
    SECTION("zero matrix")
    {
        const Matrix z(2, 4);
        const auto r = rref(z);
        CHECK(r.mat == z);
        CHECK(r.pivots.empty());
        CHECK(r.rank == 0);
    }
    SECTION("rank-1 2x2")
    {
        const auto r = rref(Matrix{{2, 4}, {1, 2}});
        CHECK(r.mat == Matrix{{1, 2}, {0, 0}});
        CHECK(r.pivots == std::vector<std::size_t>{0});
        CHECK(r.rank == 1);
    }
}

TEST_CASE("kernel bases on the frozen examples")
{
    CHECK(kernel_basis(Matrix::identity(4)).empty());

    const auto z = kernel_basis(Matrix(2, 3));
    REQUIRE(z.size() == 3);
    CHECK(z[0] == unit_vec(3, 0));
    CHECK(z[1] == unit_vec(3, 1));
    CHECK(z[2] == unit_vec(3, 2));

    const auto k = kernel_basis(Matrix{{1, 1, 0}});
    REQUIRE(k.size() == 2);
    CHECK(k[0] == Vec{-1, 1, 0});
    CHECK(k[1] == Vec{0, 0, 1});
}

TEST_CASE("row_space canonicalizes and drops zero rows")
{
    CHECK(row_space({{1, 0}, {2, 0}}, 2) == Matrix{{1, 0}});
    CHECK(row_space({}, 5).rows() == 0);
    CHECK(row_space({}, 5).cols() == 5);
    CHECK(row_space({{0, 1}, {1, 0}}, 2) == Matrix::identity(2));
    CHECK_THROWS_AS(row_space({{1, 0}, {1, 0, 0}}, 2), std::invalid_argument);
}

TEST_CASE("membership against an rref space")
{
    const Matrix s1 = row_space({{1, 0}}, 2);
    CHECK(contains(s1, Vec{3, 0}));
    CHECK_FALSE(contains(s1, Vec{0, 1}));
    const Matrix s2 = row_space({{1, 1}}, 2);
    CHECK(contains(s2, Vec{2, 2}));
    CHECK_THROWS_AS(contains(s1, Vec{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("sums and intersections of subspaces")
{
    const std::size_t n = 3;
    const Matrix e1 = row_space({unit_vec(n, 0)}, n);
    const Matrix e2 = row_space({unit_vec(n, 1)}, n);
    CHECK(sum_spaces(e1, e2) == row_space({unit_vec(n, 0), unit_vec(n, 1)}, n));
    CHECK(intersect_spaces(e1, e2).rows() == 0);

    const Matrix a = row_space({{1, 1, 0}, {0, 0, 1}}, n);
    const Matrix b = row_space({{1, 1, 0}}, n);
    CHECK(intersect_spaces(a, b) == b);
    CHECK_THROWS_AS(sum_spaces(e1, Matrix(1, 4)), std::invalid_argument);
}

TEST_CASE("rref properties on random matrices")
{
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(7);
        const Matrix m = random_matrix(rng, rows, cols);
        const auto r = rref(m);

        // idempotence and canonicality (bit-identical rerun)
        CHECK(rref(r.mat).mat == r.mat);
        CHECK(rref(m).mat == r.mat);

        // pivots strictly increasing
        for (std::size_t i = 1; i < r.pivots.size(); ++i)
            CHECK(r.pivots[i - 1] < r.pivots[i]);

        // rank-nullity
        CHECK(kernel_basis(m).size() + r.rank == cols);
        for (const Vec& v : kernel_basis(m))
            CHECK(is_zero_vec(mat_apply(m, v)));

        // elimination is exact: rref([M | I]) = [R | T] with T·M == R
        Matrix aug(rows, cols + rows);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j)
                aug(i, j) = m(i, j);
            aug(i, cols + i) = 1;
        }
        const auto ar = rref(aug);
        Matrix rpart(rows, cols), tpart(rows, rows);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j)
                rpart(i, j) = ar.mat(i, j);
            for (std::size_t j = 0; j < rows; ++j)
                tpart(i, j) = ar.mat(i, cols + j);
        }
        CHECK(mat_mul(tpart, m) == rpart);
    }
}

TEST_CASE("dimension formula for sums and intersections")
{
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.below(5);
        const Matrix a = span_rows(random_matrix(rng, 1 + rng.below(4), n));
        const Matrix b = span_rows(random_matrix(rng, 1 + rng.below(4), n));
        const Matrix s = sum_spaces(a, b);
        const Matrix i = intersect_spaces(a, b);
        CHECK(s.rows() + i.rows() == a.rows() + b.rows());
        CHECK(space_contains_rows(s, a));
        CHECK(space_contains_rows(s, b));
        CHECK(space_contains_rows(a, i));
        CHECK(space_contains_rows(b, i));
    }
}

TEST_CASE("inverse and coordinates")
{
    const Matrix m{{1, 2}, {3, 4}};
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(mat_mul(m, *inv) == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());

    const Matrix rows{{1, 1, 0}, {0, 0, 2}};
    const auto c = coordinates_in_rows(rows, Vec{3, 3, 4});
    REQUIRE(c.has_value());
    CHECK(*c == Vec{3, 2});
    CHECK_FALSE(coordinates_in_rows(rows, Vec{1, 0, 0}).has_value());
}

TEST_CASE("annihilator characterizes membership")
{
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng.below(5);
        const Matrix a = span_rows(random_matrix(rng, 1 + rng.below(4), n));
        const Matrix ann = annihilator(a);
        for (std::size_t i = 0; i < a.rows(); ++i)
            CHECK(is_zero_vec(mat_apply(ann, a.row(i))));
        CHECK(ann.rows() + a.rows() == n);
    }
}
