#include <catch2/catch_amalgamated.hpp>

#include "conevol/lifting.hpp"
#include "conevol/generator.hpp"
#include "test_support.hpp"

using namespace conevol;
using testsup::rat;
using testsup::vec;
using testsup::vec_i;

TEST_CASE("phi embedding") {
    Vector img = phi_embed(Vector::unit(2, 0));
    CHECK(img == vec({"4/3", "0", "-1/3"}));
    CHECK(psi_embed(2, 0, Vector::unit(2, 0)) == Vector::unit(2, 0)); // identity at j=0
    CHECK(psi_embed(2, 1, Vector::unit(2, 0)) == img);
    CHECK_THROWS_AS(psi_embed(3, 1, Vector::unit(2, 0)), DimensionError);
}

TEST_CASE("lifting the square") {
    Polytope sq = canonical("cube_2");
    Polytope lift = lift_once(sq);
    lift.check_invariants();

    CHECK(lift.vertex_count() == 5);
    CHECK(volume(lift) == rat("16/3")); // (n+2)/(n+1) * 4
    CHECK(is_centered(lift));

    // H-representation equals {phi(a_i)} ∪ {e_3} as a set
    std::vector<Vector> expected;
    for (const Facet& f : sq.facets()) expected.push_back(phi_embed(f.polar_vertex));
    expected.push_back(Vector::unit(3, 2));
    std::sort(expected.begin(), expected.end());
    std::vector<Vector> actual;
    for (const Facet& f : lift.facets()) actual.push_back(f.polar_vertex);
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);
}

TEST_CASE("phi images of polar vertices support the lifted body") {
    Polytope sq = canonical("cube_2");
    Polytope lift = lift_once(sq);
    for (const Facet& f : sq.facets()) {
        Vector img = phi_embed(f.polar_vertex);
        int touched = 0;
        for (const Vector& y : lift.vertices()) {
            ExactScalar s = dot(img, y);
            CHECK(s <= 1);
            if (s == 1) ++touched;
        }
        CHECK(touched >= 3); // lifted facet vertices plus the apex
    }
}

TEST_CASE("lift lemmas hold on random centered bodies") {
    for (const Polytope& p : testsup::centered_pool(8, 71000)) {
        Polytope lift = lift_once(p);
        const int n = p.dim();
        CHECK(volume(lift) == ExactScalar(n + 2) / (n + 1) * volume(p));
        CHECK(centroid(lift).is_zero());

        std::vector<Vector> expected;
        for (const Facet& f : p.facets()) expected.push_back(phi_embed(f.polar_vertex));
        expected.push_back(Vector::unit(n + 1, n));
        std::sort(expected.begin(), expected.end());
        std::vector<Vector> actual;
        for (const Facet& f : lift.facets()) actual.push_back(f.polar_vertex);
        std::sort(actual.begin(), actual.end());
        CHECK(actual == expected);
    }
}

TEST_CASE("lift of a non-centered body needs the override") {
    Polytope t = canonical("noncentered_triangle");
    CHECK_THROWS_AS(lift_once(t), PreconditionError);
    Polytope lift = lift_once(t, true);
    lift.check_invariants();
    CHECK(volume(lift) == ExactScalar(4) / 3 * volume(t));
    CHECK_FALSE(is_centered(lift));
}

TEST_CASE("tower over the square tracks psi images") {
    Polytope sq = canonical("cube_2");
    ConeVolumeMeasure mu = cone_volumes(sq);
    int atom_e1 = -1;
    for (int i = 0; i < static_cast<int>(mu.atoms.size()); ++i)
        if (mu.atoms[static_cast<std::size_t>(i)].a == Vector::unit(2, 0)) atom_e1 = i;
    REQUIRE(atom_e1 >= 0);

    SubspaceCandidate a;
    a.kind = SubspaceKind::Affine;
    a.generators = {atom_e1};
    a.hull = AffineHull{0, Vector::unit(2, 0), {}};
    a.dim = 0;

    LiftTower tower = build_tower(sq, a, 2);

    // tracked polar vertices follow the embedding formula
    const LiftLevel& l1 = tower.chain->levels[1];
    const LiftLevel& l2 = tower.chain->levels[2];
    Vector t1 = l1.poly.facets()[static_cast<std::size_t>(
        l1.facet_map[static_cast<std::size_t>(atom_e1)])].polar_vertex;
    Vector t2 = l2.poly.facets()[static_cast<std::size_t>(
        l2.facet_map[static_cast<std::size_t>(atom_e1)])].polar_vertex;
    CHECK(t1 == vec({"4/3", "0", "-1/3"}));
    CHECK(t2 == vec({"5/3", "0", "-5/12", "-1/4"}));

    // the tracked polar vertices lie in L^(j), and dim L^(j) = dim A + 1
    for (int j = 1; j <= 2; ++j) {
        const AffineHull& lj = tower.subspaces[static_cast<std::size_t>(j)];
        CHECK(lj.dim == a.dim + 1);
        CHECK(hull_contains(lj, j == 1 ? t1 : t2));
    }

    // cone volume preservation and the bound chain
    CHECK(star_pyramid_volume(tower, 0) == 1);
    CHECK(star_pyramid_volume(tower, 1) == 1);
    CHECK(star_pyramid_volume(tower, 2) == 1);

    ChainBounds cb = chain_bounds(tower);
    CHECK(cb.measure == 1);
    CHECK(cb.bounds[0].second == rat("16/9"));
    CHECK(cb.limit == rat("4/3"));
    CHECK(cb.bounds[0].second > cb.bounds[1].second);
    CHECK(cb.bounds[1].second > cb.limit);
    CHECK(cb.measure <= cb.bounds[1].second);
}

TEST_CASE("tracking every facet reproduces the volume at each level") {
    Polytope sq = canonical("cube_2");
    auto chain = std::make_shared<const LiftChain>(build_chain(sq, 2));
    LiftTower tower = build_tower_over_facets(chain, {0, 1, 2, 3});
    for (int j = 0; j <= 2; ++j)
        CHECK(star_pyramid_volume(tower, j) == volume(sq));
}

TEST_CASE("a tight hyperplane meets its limit bound exactly") {
    Polytope t = convex_hull({vec_i({1, 0}), vec_i({0, 1}), vec_i({-1, -1})});
    ConeVolumeMeasure mu = cone_volumes(t);
    auto cands = enumerate_candidates(mu, SubspaceKind::Affine);
    bool saw_hyperplane = false;
    for (const auto& c : cands) {
        if (c.dim != 1) continue;
        saw_hyperplane = true;
        LiftTower tower = build_tower(t, c, 3);
        ChainBounds cb = chain_bounds(tower);
        CHECK(cb.measure == cb.limit); // tight simplex case
        for (const auto& [j, bound] : cb.bounds) CHECK(cb.measure < bound);
    }
    CHECK(saw_hyperplane);
}

TEST_CASE("depth caps and bad inputs") {
    Polytope sq = canonical("cube_2");
    CHECK_THROWS_AS(build_chain(sq, 7), CapError);
    CHECK_THROWS_AS(build_chain(sq, -1), DomainError);
    auto chain = std::make_shared<const LiftChain>(build_chain(sq, 1));
    CHECK_THROWS_AS(build_tower_over_facets(chain, {9}), DomainError);
    CHECK_THROWS_AS(build_tower_over_facets(chain, {}), DomainError);
    LiftTower tower = build_tower_over_facets(chain, {0});
    CHECK_THROWS_AS(star_pyramid_volume(tower, 5), DomainError);
}

TEST_CASE("sandwich: the linear inequality at each level bounds the measure") {
    for (const Polytope& p : testsup::centered_pool(4, 81000, false)) {
        ConeVolumeMeasure mu = cone_volumes(p);
        auto chain = std::make_shared<const LiftChain>(build_chain(p, 2));
        auto cands = enumerate_candidates(mu, SubspaceKind::Affine);
        for (std::size_t ci = 0; ci < cands.size(); ci += 3) { // sample every third
            const auto& c = cands[ci];
            LiftTower tower = build_tower(chain, c, c.generators);
            ChainBounds cb = chain_bounds(tower);
            for (int j = 1; j <= 2; ++j) {
                // measure = tracked cone volume at level j <= mass of L^(j) <= bound_j
                ExactScalar tracked = star_pyramid_volume(tower, j);
                CHECK(tracked == cb.measure);
                ExactScalar level_mass = measure_on_affine(
                    tower.chain->levels[static_cast<std::size_t>(j)].measure,
                    tower.subspaces[static_cast<std::size_t>(j)]);
                CHECK(tracked <= level_mass);
                CHECK(level_mass <= cb.bounds[static_cast<std::size_t>(j - 1)].second);
            }
        }
    }
}
