#include <catch2/catch_amalgamated.hpp>

#include "conevol/linalg.hpp"
#include "conevol/splitmix64.hpp"
#include "test_support.hpp"

using namespace conevol;
using testsup::vec_i;

TEST_CASE("determinant basics") {
    CHECK(determinant(Matrix::identity(3)) == 1);
    CHECK(determinant(Matrix({vec_i({0, 1}), vec_i({1, 0})})) == -1);
    CHECK_THROWS_AS(determinant(Matrix({vec_i({1, 2, 3}), vec_i({4, 5, 6})})),
                    DimensionError);
}

TEST_CASE("determinant agrees with the cofactor-expansion oracle") {
    SplitMix64 rng(21);
    for (int i = 0; i < 120; ++i) {
        Matrix m = testsup::random_matrix(rng, 3, 3, 5, 1);
        CHECK(determinant(m) == testsup::cofactor_determinant(m));
    }
    for (int i = 0; i < 40; ++i) {
        Matrix m = testsup::random_matrix(rng, 4, 4, 5, 2);
        CHECK(determinant(m) == testsup::cofactor_determinant(m));
    }
}

TEST_CASE("determinant vanishes on a repeated row") {
    SplitMix64 rng(22);
    for (int i = 0; i < 60; ++i) {
        Vector a = testsup::random_vector(rng, 4, 6);
        Vector b = testsup::random_vector(rng, 4, 6);
        Vector c = testsup::random_vector(rng, 4, 6);
        CHECK(determinant(Matrix({a, b, c, a})) == 0);
    }
}

TEST_CASE("rank_and_solve basics") {
    SECTION("identity") {
        auto r = rank_and_solve(Matrix::identity(3), Vector::unit(3, 0));
        CHECK(r.rank == 3);
        REQUIRE(r.solution);
        CHECK(*r.solution == Vector::unit(3, 0));
    }
    SECTION("zero matrix") {
        Matrix z({vec_i({0, 0}), vec_i({0, 0})});
        CHECK(rank_and_solve(z).rank == 0);
        CHECK_FALSE(rank_and_solve(z, vec_i({1, 0})).solution);
        REQUIRE(rank_and_solve(z, vec_i({0, 0})).solution);
    }
    SECTION("rhs length mismatch") {
        CHECK_THROWS_AS(rank_and_solve(Matrix::identity(3), vec_i({1, 2})),
                        DimensionError);
    }
    SECTION("two equal rows") {
        Matrix m({vec_i({1, 2, 3}), vec_i({1, 2, 3}), vec_i({0, 1, 1})});
        auto r = rank_and_solve(m);
        CHECK(r.rank <= 2);
        CHECK(r.rank == testsup::row_reduction_rank(m));
    }
}

TEST_CASE("rank matches the row-reduction oracle and solutions verify") {
    SplitMix64 rng(23);
    for (int i = 0; i < 120; ++i) {
        int rows = 2 + static_cast<int>(rng.next_below(4));
        int cols = 2 + static_cast<int>(rng.next_below(4));
        Matrix m = testsup::random_matrix(rng, rows, cols, 3, 1);
        CHECK(rank_and_solve(m).rank == testsup::row_reduction_rank(m));

        Vector rhs = testsup::random_vector(rng, rows, 4);
        auto r = rank_and_solve(m, rhs);
        if (r.solution) {
            for (int k = 0; k < rows; ++k)
                CHECK(dot(m.row(k), *r.solution) == rhs[k]);
        } else {
            // Inconsistency certificate: the augmented matrix has higher rank.
            std::vector<Vector> aug;
            for (int k = 0; k < rows; ++k) {
                auto c = m.row(k).coords();
                c.push_back(rhs[k]);
                aug.push_back(Vector(std::move(c)));
            }
            CHECK(testsup::row_reduction_rank(Matrix(std::move(aug))) == r.rank + 1);
        }
    }
}

TEST_CASE("affine_hull basics") {
    CHECK(affine_hull({Vector::unit(2, 0)}).dim == 0);
    CHECK_THROWS_AS(affine_hull({}), DomainError);

    SECTION("two points span a line") {
        auto h = affine_hull({Vector::unit(2, 0), Vector::unit(2, 1)});
        CHECK(h.dim == 1);
        CHECK(hull_contains(h, Vector::unit(2, 0)));
        CHECK(hull_contains(h, Vector::unit(2, 1)));
        CHECK(hull_contains(h, testsup::vec({"1/2", "1/2"})));
        CHECK_FALSE(hull_contains(h, testsup::vec({"1", "1"})));
    }

    SECTION("coplanar quadruple in R^3") {
        Vector mean = testsup::vec({"1/3", "1/3", "1/3"});
        auto h = affine_hull({Vector::unit(3, 0), Vector::unit(3, 1), Vector::unit(3, 2), mean});
        CHECK(h.dim == 2);
        // rank oracle on the difference vectors
        Matrix diffs({Vector::unit(3, 1) - Vector::unit(3, 0),
                      Vector::unit(3, 2) - Vector::unit(3, 0), mean - Vector::unit(3, 0)});
        CHECK(testsup::row_reduction_rank(diffs) == 2);
    }
}

TEST_CASE("affine_hull dimension equals the difference rank") {
    SplitMix64 rng(24);
    for (int i = 0; i < 80; ++i) {
        int n = 2 + static_cast<int>(rng.next_below(3));
        int k = 1 + static_cast<int>(rng.next_below(5));
        std::vector<Vector> pts;
        for (int j = 0; j < k + 1; ++j) pts.push_back(testsup::random_vector(rng, n, 3));
        auto h = affine_hull(pts);
        CHECK(h.dim <= k);
        std::vector<Vector> diffs;
        for (std::size_t j = 1; j < pts.size(); ++j) diffs.push_back(pts[j] - pts[0]);
        CHECK(h.dim == testsup::row_reduction_rank(Matrix(std::move(diffs))));
        for (const Vector& p : pts) CHECK(hull_contains(h, p));
    }
}

TEST_CASE("SpanBuilder agrees with rank_and_solve") {
    SplitMix64 rng(25);
    for (int i = 0; i < 80; ++i) {
        int n = 2 + static_cast<int>(rng.next_below(4));
        int k = 1 + static_cast<int>(rng.next_below(5));
        std::vector<Vector> vs;
        SpanBuilder span(n);
        for (int j = 0; j < k; ++j) {
            vs.push_back(testsup::random_vector(rng, n, 3));
            span.insert(vs.back());
        }
        CHECK(span.dim() == rank_and_solve(Matrix(vs)).rank);
        Vector probe = testsup::random_vector(rng, n, 3);
        bool member = span.contains(probe);
        auto sol = rank_and_solve(Matrix::from_columns(vs, n), probe);
        CHECK(member == static_cast<bool>(sol.solution));
    }
}
