#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ghal/exactlin.hpp"

using namespace ghal;

namespace {

const Field F2 = Field::prime(2);

/// All vectors of F_2^n as columns.
std::vector<Matrix> all_vectors(std::size_t n) {
    std::vector<Matrix> out;
    for (std::size_t bits = 0; bits < (std::size_t(1) << n); ++bits) {
        Matrix v(F2, n, 1);
        for (std::size_t i = 0; i < n; ++i)
            if (bits >> i & 1) v.set(i, 0, Rational(1));
        out.push_back(v);
    }
    return out;
}

Matrix random_matrix(Field f, std::size_t r, std::size_t c, std::mt19937& rng, int range = 5) {
    std::uniform_int_distribution<int> dist(-range, range);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rational(dist(rng)));
    return m;
}

}  // namespace

TEST_CASE("field construction") {
    CHECK(Field::prime(7).characteristic() == 7);
    CHECK_THROWS_AS(Field::prime(9), InvalidArgument);
    CHECK_THROWS_AS(Field::prime(1), InvalidArgument);
    CHECK(Field::rationals().is_rationals());
    CHECK(Field::prime(5).reduce(Rational(-1)) == Rational(4));
    CHECK(Field::prime(5).reduce(Rational(1, 2)) == Rational(3));
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(Matrix::identity(F2, 2)).cols() == 0);
    CHECK(kernel_basis(Matrix::identity(F2, 2)).rows() == 2);

    Matrix k = kernel_basis(Matrix::from_rows(F2, {{1, 1}}));
    CHECK(k == Matrix::from_rows(F2, {{1}, {1}}));

    Matrix x = Matrix::from_rows(F2, {{0, 0}, {1, 0}});
    Matrix kx = kernel_basis(x);
    REQUIRE(kx.cols() == 1);
    std::vector<Matrix> oracle;
    for (const auto& v : all_vectors(2))
        if ((x * v).is_zero() && !v.is_zero()) oracle.push_back(v);
    REQUIRE(oracle.size() == 1);
    CHECK(kx == oracle[0]);
}

TEST_CASE("solve_right examples") {
    Matrix b = Matrix::from_rows(F2, {{1, 0, 1}, {0, 1, 1}});
    auto r = solve_right(Matrix::identity(F2, 2), b);
    REQUIRE(r.solvable);
    CHECK(r.solution == b);

    Matrix x = Matrix::from_rows(F2, {{0, 0}, {1, 0}});
    Matrix rhs = Matrix::from_rows(F2, {{0}, {1}});
    auto s = solve_right(x, rhs);
    REQUIRE(s.solvable);
    CHECK(x * s.solution == rhs);
    std::size_t lifts = 0;
    for (const auto& v : all_vectors(2))
        if (x * v == rhs) ++lifts;
    CHECK(lifts == 2);

    auto u = solve_right(Matrix(F2, 2, 2), Matrix::from_rows(F2, {{1}, {0}}));
    CHECK_FALSE(u.solvable);
    CHECK(u.certificate_column == 0);

    CHECK_THROWS_AS(solve_right(Matrix(F2, 2, 2), Matrix(F2, 3, 1)), InvalidArgument);
}

TEST_CASE("split_section examples") {
    CHECK(*split_section(Matrix::identity(F2, 3)) == Matrix::identity(F2, 3));
    CHECK(*split_section(Matrix::from_rows(F2, {{1, 0}})) == Matrix::from_rows(F2, {{1}, {0}}));
    CHECK(*split_section(Matrix::from_rows(F2, {{0, 1}})) == Matrix::from_rows(F2, {{0}, {1}}));
    CHECK_FALSE(split_section(Matrix(F2, 1, 2)).has_value());
}

TEST_CASE("quotient_structure examples") {
    auto q0 = quotient_structure(F2, 2, Matrix(F2, 2, 0));
    CHECK(q0.quotient_dim == 2);
    CHECK(q0.projection == Matrix::identity(F2, 2));

    auto q1 = quotient_structure(F2, 2, Matrix::identity(F2, 2));
    CHECK(q1.quotient_dim == 0);
    CHECK(q1.projection.rows() == 0);
    CHECK(q1.projection.cols() == 2);

    auto q2 = quotient_structure(F2, 2, Matrix::from_rows(F2, {{0}, {1}}));
    CHECK(q2.quotient_dim == 1);
    CHECK(q2.projection == Matrix::from_rows(F2, {{1, 0}}));
    CHECK(q2.projection * q2.section == Matrix::identity(F2, 1));

    CHECK_THROWS_AS(quotient_structure(F2, 2, Matrix::from_rows(F2, {{1, 1}, {0, 0}})), InvalidArgument);
}

TEST_CASE("empty matrices are accepted") {
    Matrix e(F2, 0, 3);
    CHECK(rank(e) == 0);
    CHECK(kernel_basis(e) == Matrix::identity(F2, 3));
    CHECK(kernel_basis(Matrix(F2, 3, 0)).cols() == 0);
    auto s = solve_right(Matrix(F2, 0, 2), Matrix(F2, 0, 1));
    CHECK(s.solvable);
    CHECK(split_section(Matrix(F2, 0, 0)).has_value());
}

TEST_CASE("rational arithmetic stays exact") {
    Field q = Field::rationals();
    Matrix a = Matrix::from_rows(q, {{2, 1}, {1, 3}});
    Matrix inv = inverse(a);
    CHECK(inv.at(0, 0) == Rational(3, 5));
    CHECK(a * inv == Matrix::identity(q, 2));
}

TEST_CASE("rank-nullity, solve soundness and determinism on random matrices") {
    std::mt19937 rng(20261018);
    for (Field f : {Field::prime(2), Field::prime(3), Field::prime(101), Field::rationals()}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = rng() % 6, c = rng() % 6;
            Matrix m = random_matrix(f, r, c, rng, 2);
            Matrix k = kernel_basis(m);
            CHECK((m * k).is_zero());
            CHECK(rank(k) == k.cols());
            CHECK(rank(m) + k.cols() == c);
            CHECK(rank(m.transpose()) == rank(m));

            Matrix b = random_matrix(f, r, 2, rng, 2);
            auto s = solve_right(m, b);
            if (s.solvable) {
                CHECK(m * s.solution == b);
            } else {
                CHECK(rank(hstack(m, b.column(s.certificate_column))) == rank(m) + 1);
            }
            CHECK(kernel_basis(m) == k);
            CHECK(solve_right(m, b).solution == s.solution);
        }
    }
}

TEST_CASE("kron matches the vec identity") {
    std::mt19937 rng(7);
    Field f = Field::prime(5);
    Matrix a = random_matrix(f, 2, 3, rng), x = random_matrix(f, 3, 4, rng), b = random_matrix(f, 4, 2, rng);
    CHECK((a * x * b).vec() == kron(b.transpose(), a) * x.vec());
    CHECK(Matrix::unvec(x.vec(), 3, 4) == x);
}
