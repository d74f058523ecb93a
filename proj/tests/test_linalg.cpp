#include "comprelie/linalg.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace comprelie;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    return Matrix::from_rows(rows);
}

}  // namespace

TEST_CASE("rref of a worked example") {
    // [1 2 3; 2 4 7; 1 2 4] has rank 2 with pivots in columns 0 and 2
    Matrix m = mat({{1, 2, 3}, {2, 4, 7}, {1, 2, 4}});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 2});
    CHECK(r.reduced == mat({{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
}

TEST_CASE("rref is idempotent and deterministic") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = testutil::random_matrix(rng, 4, 5);
        RrefResult once = rref(m);
        RrefResult twice = rref(once.reduced);
        CHECK(once.reduced == twice.reduced);
        CHECK(once.rank == twice.rank);
        CHECK(rref(m).reduced == once.reduced);
    }
}

TEST_CASE("rref picks the first nonzero pivot") {
    Matrix m = mat({{0, 1}, {1, 0}});
    RrefResult r = rref(m);
    CHECK(r.reduced == Matrix::identity(2));
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rank") {
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix(2, 5)) == 0);
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(mat({{1, 2}, {2, 4}}).transpose()) == 1);
}

TEST_CASE("kernel basis spans the kernel") {
    Matrix m = mat({{1, 2, 3}, {2, 4, 7}, {1, 2, 4}});
    SubspaceBasis k = kernel_basis(m);
    CHECK(k.ambient_dim == 3);
    CHECK(k.dim() == 1);
    // free column 1, set to 1
    CHECK(k.vectors[0] == Vec{Rational(-2), Rational(1), Rational(0)});
    for (const Vec& v : k.vectors) {
        CHECK(vec_is_zero(m.apply(v)));
    }
    CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);
    CHECK(kernel_basis(Matrix(2, 3)).dim() == 3);
}

TEST_CASE("kernel plus rank fills the column count") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = testutil::random_matrix(rng, 3, 6);
        CHECK(kernel_basis(m).dim() + rank(m) == 6);
    }
}

TEST_CASE("solve finds the deterministic particular solution") {
    Matrix m = mat({{1, 2, 3}, {2, 4, 7}});
    Vec b{Rational(6), Rational(13)};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
    // free variable (column 1) pinned to zero
    CHECK((*x)[1] == Rational(0));
    CHECK(*x == Vec{Rational(3), Rational(0), Rational(1)});
}

TEST_CASE("solve reports inconsistency") {
    Matrix m = mat({{1, 2}, {2, 4}});
    CHECK_FALSE(solve(m, Vec{Rational(1), Rational(3)}).has_value());
    CHECK(solve(m, Vec{Rational(1), Rational(2)}).has_value());
}

TEST_CASE("solve on random consistent systems") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m = testutil::random_matrix(rng, 4, 3);
        Vec x0 = testutil::random_vec(rng, 3);
        Vec b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("column space basis is canonical") {
    Matrix m = mat({{1, 2}, {2, 4}, {3, 7}});
    SubspaceBasis cs = column_space_basis(m);
    CHECK(cs.ambient_dim == 3);
    CHECK(cs.dim() == 2);
    for (const Vec& v : cs.vectors) {
        // each basis vector is a combination of the columns
        CHECK(solve(m, v).has_value());
    }
    // canonical: nonzero rows of rref(M^T), so leading entries are 1
    CHECK(cs.vectors[0][0] == Rational(1));
}

TEST_CASE("span membership") {
    SubspaceBasis plane{3, {Vec{Rational(1), Rational(0), Rational(0)},
                            Vec{Rational(0), Rational(1), Rational(0)}}};
    CHECK(in_span(plane, Vec{Rational(2), Rational(-5), Rational(0)}));
    CHECK_FALSE(in_span(plane, Vec{Rational(0), Rational(0), Rational(1)}));
    CHECK(is_independent(plane));
    SubspaceBasis dep{3, {Vec{Rational(1), Rational(1), Rational(0)},
                          Vec{Rational(2), Rational(2), Rational(0)}}};
    CHECK_FALSE(is_independent(dep));
}

TEST_CASE("span containment") {
    SubspaceBasis line{2, {Vec{Rational(1), Rational(1)}}};
    SubspaceBasis all{2, {Vec{Rational(1), Rational(0)}, Vec{Rational(0), Rational(1)}}};
    CHECK(span_contained(line, all));
    CHECK_FALSE(span_contained(all, line));
}

TEST_CASE("complement basis extends greedily in the given order") {
    SubspaceBasis line{2, {Vec{Rational(1), Rational(0)}}};
    SubspaceBasis all{2, {Vec{Rational(1), Rational(0)}, Vec{Rational(1), Rational(1)},
                          Vec{Rational(0), Rational(1)}}};
    SubspaceBasis comp = complement_basis(line, all);
    CHECK(comp.dim() == 1);
    // the first full vector already lies in the line, the second extends
    CHECK(comp.vectors[0] == Vec{Rational(1), Rational(1)});
}

TEST_CASE("complement of the zero subspace is a basis of the span") {
    SubspaceBasis none{3, {}};
    SubspaceBasis full{3, {Vec{Rational(1), Rational(2), Rational(0)},
                           Vec{Rational(2), Rational(4), Rational(0)},
                           Vec{Rational(0), Rational(0), Rational(5)}}};
    SubspaceBasis comp = complement_basis(none, full);
    CHECK(comp.dim() == 2);
    CHECK(is_independent(comp));
}

TEST_CASE("inverse round trips") {
    Matrix m = mat({{1, 2}, {3, 7}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());
    CHECK(is_invertible(m));
    CHECK_FALSE(inverse(mat({{1, 2}, {2, 4}})).has_value());
    CHECK_FALSE(is_invertible(mat({{1, 2}, {2, 4}})));
    CHECK_FALSE(is_invertible(Matrix(2, 3)));
}

TEST_CASE("inverse with fractions stays exact") {
    Matrix m = mat({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}});
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv).is_identity());
}

TEST_CASE("matrix block and stack operations") {
    Matrix m = mat({{1, 2, 3}, {4, 5, 6}});
    CHECK(m.block(0, 1, 2, 2) == mat({{2, 3}, {5, 6}}));
    CHECK(hstack(m.block(0, 0, 2, 1), m.block(0, 1, 2, 2)) == m);
    CHECK(vstack(m.block(0, 0, 1, 3), m.block(1, 0, 1, 3)) == m);
    Matrix copy = m;
    copy.set_block(0, 0, mat({{9}}));
    CHECK(copy(0, 0) == Rational(9));
    CHECK(copy(0, 1) == Rational(2));
}

TEST_CASE("from_cols matches col accessor") {
    Matrix m = Matrix::from_cols({Vec{Rational(1), Rational(2)}, Vec{Rational(3), Rational(4)}});
    CHECK(m.col(0) == Vec{Rational(1), Rational(2)});
    CHECK(m.col(1) == Vec{Rational(3), Rational(4)});
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
}

TEST_CASE("apply is matrix-vector product") {
    Matrix m = mat({{1, 2}, {3, 4}});
    CHECK(m.apply(Vec{Rational(1), Rational(1)}) == Vec{Rational(3), Rational(7)});
}
