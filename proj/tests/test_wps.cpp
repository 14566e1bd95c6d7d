#include "helpers.hpp"

#include <stringy/wps.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace stringy;
using namespace testutil;

TEST_CASE("weight parameters are validated") {
    REQUIRE_THROWS_AS((WPSParams{1, 2, 1}.validate()), InvalidParams);
    REQUIRE_THROWS_AS((WPSParams{2, 1, 1}.validate()), InvalidParams);
    REQUIRE_THROWS_AS((WPSParams{2, 2, 0}.validate()), InvalidParams);
    REQUIRE_THROWS_AS((WPSParams{2, 2, 2}.validate()), InvalidParams);
    REQUIRE_NOTHROW((WPSParams{2, 2, 1}.validate()));
    REQUIRE((WPSParams{3, 5, 2}.dim()) == 17);
}

TEST_CASE("the smallest family slab materializes with known geometry") {
    Polytope slab = wps_delta({2, 2, 1});
    QMat expect = qmat(IMat{
        {-1, -1, -1, -1, -1}, {-1, -1, -1, -1, 2}, {-1, -1, -1, 0, 2}, {-1, -1, -1, 6, -1},
        {-1, -1, 0, -1, 2},   {-1, -1, 6, -1, -1}, {-1, 0, -1, -1, 2}, {-1, 6, -1, -1, -1},
        {0, -1, -1, -1, 2},   {6, -1, -1, -1, -1}});
    REQUIRE(sortedq(slab.vertices()) == sortedq(expect));
    REQUIRE(slab.face_lattice().census == std::vector<long>{10, 25, 30, 20, 7});
    REQUIRE(normalized_volume(slab) == 8403);
    REQUIRE(points_in(slab).size() == 496);
}

TEST_CASE("slabs have two vertices per coordinate direction") {
    for (WPSParams p : {WPSParams{2, 2, 1}, WPSParams{2, 3, 1}, WPSParams{3, 2, 1},
                        WPSParams{3, 2, 2}}) {
        Polytope slab = wps_delta(p);
        REQUIRE(slab.vertices().size() == 2 * size_t(p.dim()));
        REQUIRE(slab.is_lattice());
    }
}

TEST_CASE("the family dual is the weighted simplex and matches the lattice dual") {
    Polytope dual = wps_dual({2, 2, 1});
    QMat simplex5 = qmat(IMat{{-1, -1, -1, -1, -2}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0},
                              {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}});
    REQUIRE(sortedq(dual.vertices()) == sortedq(simplex5));
    REQUIRE(sortedq(mav_dual(wps_delta({2, 2, 1})).vertices()) == sortedq(simplex5));
}

TEST_CASE("closed forms reproduce frozen stringy euler numbers") {
    REQUIRE(wps_estr_closed({2, 2, 1}) == 2784);
    REQUIRE(wps_estr_closed_dual({2, 2, 1}) == 2784);
    REQUIRE(wps_estr_l1({2, 2, 1}) == 2784);
    REQUIRE(wps_aggregate({2, 2, 1}) == 2);

    REQUIRE(wps_estr_closed({3, 2, 2}) == -24242412);
    REQUIRE(wps_estr_closed_dual({3, 2, 2}) == Rat(72727240, 3));
    REQUIRE(wps_aggregate({3, 2, 2}) == 4);

    REQUIRE(wps_estr_closed({3, 5, 2}) == Rat(Int("7763881381861803096846"), 5));
    REQUIRE(wps_estr_closed_dual({3, 5, 2}) == Rat(Int("4658328829117081858108"), 3));
    REQUIRE(wps_aggregate({3, 5, 2}) == Rat(16, 5));
}

TEST_CASE("the closed form matches the face sum on the materialized slab") {
    REQUIRE(estr_general(wps_delta({2, 2, 1})) == wps_estr_closed({2, 2, 1}));
}

TEST_CASE("mirror symmetry holds exactly on the l = 1 line") {
    for (long a = 2; a <= 4; ++a)
        for (long b = 2; b <= 4; ++b) {
            WPSParams p{a, b, 1};
            WPSReport r = wps_report(p);
            REQUIRE(r.mirror_pass);
            REQUIRE(wps_estr_l1(p) == r.e_x);
        }
    REQUIRE_THROWS_AS(wps_estr_l1({3, 2, 2}), InvalidParams);
}

TEST_CASE("denominators stay within the weights") {
    for (long a = 2; a <= 6; ++a)
        for (long b = 2; b <= 6; ++b)
            for (long l = 1; l < a; ++l) {
                WPSParams p{a, b, l};
                REQUIRE(is_integer(wps_estr_closed(p) * b));
                REQUIRE(is_integer(wps_estr_closed_dual(p) * a));
            }
}

TEST_CASE("reports carry the integrality flags of both sides") {
    WPSReport small = wps_report({2, 2, 1});
    REQUIRE(small.dim == 5);
    REQUIRE(small.e_x == 2784);
    REQUIRE(small.e_dual == 2784);
    REQUIRE(small.aggregate == 2);
    REQUIRE(small.x_integral);
    REQUIRE(small.dual_integral);
    REQUIRE(small.x_denominator_divides_b);
    REQUIRE(small.dual_denominator_divides_a);
    REQUIRE(small.mirror_pass);

    WPSReport odd = wps_report({3, 5, 2});
    REQUIRE(odd.dim == 17);
    REQUIRE(odd.aggregate == Rat(16, 5));
    REQUIRE_FALSE(odd.x_integral);
    REQUIRE_FALSE(odd.dual_integral);
    REQUIRE(odd.x_denominator_divides_b);
    REQUIRE(odd.dual_denominator_divides_a);
    REQUIRE_FALSE(odd.mirror_pass);
    REQUIRE(is_integer(odd.e_x - odd.aggregate));
}

TEST_CASE("materialization refuses dimensions beyond the bound") {
    REQUIRE_THROWS_AS(wps_delta({3, 3, 1}), DimensionGuard);
    REQUIRE_THROWS_AS(wps_dual({3, 3, 1}), DimensionGuard);
    REQUIRE_NOTHROW(wps_dual({3, 3, 1}, 10));
    REQUIRE(wps_delta({3, 3, 1}, 10).vertices().size() == 20);
}

TEST_CASE("the environment can tighten or restore the materialization bound") {
    unsetenv("STRINGY_MAX_DIM");
    REQUIRE(max_materialize_dim() == 8);

    setenv("STRINGY_MAX_DIM", "4", 1);
    REQUIRE(max_materialize_dim() == 4);
    REQUIRE_THROWS_AS(guarded_dim(WPSParams{2, 2, 1}, max_materialize_dim()), DimensionGuard);

    setenv("STRINGY_MAX_DIM", "not-a-number", 1);
    REQUIRE(max_materialize_dim() == 8);
    setenv("STRINGY_MAX_DIM", "0", 1);
    REQUIRE(max_materialize_dim() == 8);

    unsetenv("STRINGY_MAX_DIM");
    REQUIRE(guarded_dim(WPSParams{2, 2, 1}, max_materialize_dim()) == 5);
}
