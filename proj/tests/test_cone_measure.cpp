#include <catch2/catch_amalgamated.hpp>

#include "conevol/cone_measure.hpp"
#include "conevol/generator.hpp"
#include "test_support.hpp"

using namespace conevol;
using testsup::rat;
using testsup::vec;
using testsup::vec_i;

TEST_CASE("cone volumes of the square") {
    Polytope sq = canonical("cube_2");
    ConeVolumeMeasure mu = cone_volumes(sq);
    REQUIRE(mu.atoms.size() == 4);
    CHECK(mu.total == 4);
    for (const auto& atom : mu.atoms) {
        CHECK(atom.w == 1);
        // independent route: the facet cone is its own little hull
        int i = static_cast<int>(&atom - mu.atoms.data());
        std::vector<Vector> cone_pts{Vector::zero(2)};
        for (int k : sq.facets()[static_cast<std::size_t>(i)].incident)
            cone_pts.push_back(sq.vertices()[static_cast<std::size_t>(k)]);
        CHECK(atom.w == hull_volume(cone_pts));
    }
}

TEST_CASE("cone volumes of the centered triangle") {
    Polytope t = convex_hull({vec_i({1, 0}), vec_i({0, 1}), vec_i({-1, -1})});
    ConeVolumeMeasure mu = cone_volumes(t);
    REQUIRE(mu.atoms.size() == 3);
    CHECK(mu.total == rat("3/2"));
    for (const auto& atom : mu.atoms) CHECK(atom.w == rat("1/2"));
}

TEST_CASE("atom weight equals the star pyramid volume over its facet") {
    // weight(i) = H^n(conv(F_i ∪ {0})), computed independently per facet
    for (const Polytope& p : testsup::centered_pool(6, 640)) {
        ConeVolumeMeasure mu = cone_volumes(p);
        for (int i = 0; i < p.facet_count(); ++i) {
            std::vector<Vector> cone_pts{Vector::zero(p.dim())};
            for (int k : p.facets()[static_cast<std::size_t>(i)].incident)
                cone_pts.push_back(p.vertices()[static_cast<std::size_t>(k)]);
            CHECK(mu.atoms[static_cast<std::size_t>(i)].w == hull_volume(cone_pts));
            CHECK(mu.atoms[static_cast<std::size_t>(i)].w > 0);
        }
    }
}

TEST_CASE("cone decomposition and closure relation") {
    for (const Polytope& p : testsup::centered_pool(10, 888)) {
        ConeVolumeMeasure mu = cone_volumes(p);
        CHECK(mu.total == volume(p)); // Σ w_i = vol(P)
        Vector moment = Vector::zero(p.dim());
        for (const auto& atom : mu.atoms) moment = moment + atom.w * atom.a;
        CHECK(moment.is_zero()); // Σ w_i a_i = 0
    }
}

TEST_CASE("support values") {
    Polytope sq = canonical("cube_2");
    CHECK(support_value(sq, Vector::unit(2, 0)) == 1);
    CHECK(support_value(sq, vec_i({1, 1})) == 2);
    CHECK_THROWS_AS(support_value(sq, Vector::zero(2)), DomainError);

    SplitMix64 rng(3030);
    for (int i = 0; i < 50; ++i) {
        Vector u = testsup::random_vector(rng, 2, 5);
        if (u.is_zero()) continue;
        ExactScalar lambda = ExactScalar(rng.next_in_range(1, 9)) / rng.next_in_range(1, 4);
        CHECK(support_value(sq, lambda * u) == lambda * support_value(sq, u));
    }
}

TEST_CASE("measure restricted to subspaces") {
    Polytope sq = canonical("cube_2");
    ConeVolumeMeasure mu = cone_volumes(sq);

    AffineHull point_e1{0, Vector::unit(2, 0), {}};
    CHECK(measure_on_affine(mu, point_e1) == 1);

    Polytope t = convex_hull({vec_i({1, 0}), vec_i({0, 1}), vec_i({-1, -1})});
    ConeVolumeMeasure mt = cone_volumes(t);
    AffineHull a1{0, mt.atoms[0].a, {}};
    CHECK(measure_on_affine(mt, a1) == mt.total / 3);

    AffineHull empty_hit{0, vec_i({7, 7}), {}};
    CHECK(measure_on_affine(mu, empty_hit) == 0);
}

TEST_CASE("translated weight: values, oracle, affinity") {
    Polytope sq = canonical("cube_2");
    ConeVolumeMeasure mu = cone_volumes(sq);

    // facet index of polar vertex e_1
    int fe1 = -1;
    for (int i = 0; i < sq.facet_count(); ++i)
        if (sq.facets()[static_cast<std::size_t>(i)].polar_vertex == Vector::unit(2, 0)) fe1 = i;
    REQUIRE(fe1 >= 0);

    SECTION("f(0) recovers the measure") {
        std::vector<int> omega{fe1, (fe1 + 1) % 4};
        ExactScalar expect = mu.atoms[static_cast<std::size_t>(omega[0])].w +
                             mu.atoms[static_cast<std::size_t>(omega[1])].w;
        CHECK(translated_weight(sq, omega, Vector::zero(2)) == expect);
    }

    SECTION("square shifted halfway toward its right edge") {
        Vector x = vec({"1/2", "0"});
        CHECK(translated_weight(sq, {fe1}, x) == rat("1/2"));

        // direct recomputation oracle on K - x
        std::vector<Vector> shifted;
        for (const Vector& v : sq.vertices()) shifted.push_back(v - x);
        ConeVolumeMeasure mshift = cone_volumes(convex_hull(shifted));
        ExactScalar w = -1;
        for (const auto& atom : mshift.atoms)
            if (testsup::positively_parallel(atom.a, Vector::unit(2, 0))) w = atom.w;
        CHECK(w == rat("1/2"));
    }

    SECTION("outside point is rejected") {
        CHECK_THROWS_AS(translated_weight(sq, {fe1}, vec_i({2, 0})), DomainError);
        CHECK_THROWS_AS(translated_weight(sq, {17}, Vector::zero(2)), DomainError);
    }

    SECTION("midpoint affinity on random interior points") {
        SplitMix64 rng(404);
        std::vector<int> omega{fe1, (fe1 + 2) % 4};
        for (int i = 0; i < 40; ++i) {
            Vector x = testsup::random_interior_point(sq, rng);
            Vector y = testsup::random_interior_point(sq, rng);
            Vector mid = rat("1/2") * (x + y);
            CHECK(translated_weight(sq, omega, mid) ==
                  (translated_weight(sq, omega, x) + translated_weight(sq, omega, y)) / 2);
        }
    }
}

TEST_CASE("translated weight equals the recomputed measure of the translate") {
    SplitMix64 rng(505);
    for (const Polytope& p : testsup::centered_pool(5, 7000, false)) {
        ConeVolumeMeasure mu = cone_volumes(p);
        for (int rep = 0; rep < 4; ++rep) {
            Vector x = testsup::random_interior_point(p, rng);
            std::vector<Vector> shifted;
            for (const Vector& v : p.vertices()) shifted.push_back(v - x);
            ConeVolumeMeasure mshift = cone_volumes(convex_hull(shifted));
            for (int i = 0; i < p.facet_count(); ++i) {
                ExactScalar direct = translated_weight(p, {i}, x);
                const Vector& ai = mu.atoms[static_cast<std::size_t>(i)].a;
                ExactScalar recomputed = -1;
                for (const auto& atom : mshift.atoms)
                    if (testsup::positively_parallel(atom.a, ai)) recomputed = atom.w;
                CHECK(direct == recomputed);
            }
        }
    }
}
