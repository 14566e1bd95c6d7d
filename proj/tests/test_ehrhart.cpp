#include "helpers.hpp"

#include <stringy/ehrhart.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace stringy;
using namespace testutil;

TEST_CASE("normalized volumes of standard bodies") {
    REQUIRE(normalized_volume(cube(3)) == 48);
    REQUIRE(normalized_volume(Polytope::hull(IMat{{0, 0}, {1, 0}, {0, 1}})) == 1);
    REQUIRE(normalized_volume(Polytope::hull(IMat{{1, 0}, {0, 1}, {-1, -1}})) == 3);
    REQUIRE(normalized_volume(cross(4)) == 16);

    // lower-dimensional and rational point sets measure against their own span
    REQUIRE(normalized_volume(QMat{{0, 0, 0}, {3, 0, 0}}) == 3);
    REQUIRE(normalized_volume(QMat{{0}, {Rat(1, 3)}}) == Rat(1, 3));
    REQUIRE(normalized_volume(QMat{{7, -2}}) == 1);
    REQUIRE(normalized_volume(QMat{{0, 0}, {1, 0}, {0, Rat(1, 2)}}) == Rat(1, 2));
}

TEST_CASE("facet volumes of the cube split evenly") {
    Polytope c3 = cube(3);
    const FaceLattice& L = c3.face_lattice();
    for (size_t fid = 0; fid < L.faces.size(); ++fid)
        if (L.faces[fid].dim == 2) REQUIRE(face_volume(c3, fid) == 8);
}

TEST_CASE("dilation counts of simple shapes") {
    DilationCounter cube_counts(cube(3).vertices());
    REQUIRE(cube_counts.count(0) == 1);
    REQUIRE(cube_counts.count(1) == 27);
    REQUIRE(cube_counts.count(2) == 125);
    REQUIRE(cube_counts.count(3) == 343);

    DilationCounter edge(QMat{{0, 0, 0}, {3, 1, 0}});
    REQUIRE(edge.dim() == 1);
    REQUIRE(edge.count(1) == 2);
    REQUIRE(edge.count(4) == 5);

    DilationCounter point(QMat{{5, 5}});
    REQUIRE(point.dim() == 0);
    REQUIRE(point.count(7) == 1);
}

TEST_CASE("h-star vectors of known polytopes") {
    HStarVector sq = hstar(qmat(IMat{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    REQUIRE(sq.dim == 2);
    REQUIRE(sq.psi == std::vector<Int>{1, 1, 0});

    HStarVector tri = hstar(qmat(IMat{{1, 0}, {0, 1}, {-1, -1}}));
    REQUIRE(tri.psi == std::vector<Int>{1, 1, 1});

    HStarVector seg = hstar(qmat(IMat{{0}, {2}}));
    REQUIRE(seg.psi == std::vector<Int>{1, 1});

    HStarVector c3 = hstar(cube(3).vertices());
    Int total = 0;
    for (const Int& p : c3.psi) total += p;
    REQUIRE(Rat(total) == 48);
    REQUIRE(c3.psi[0] == 1);
}

TEST_CASE("h-star entries are nonnegative and sum to the volume on random input") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<long> coord(-3, 3);
    std::uniform_int_distribution<size_t> dims(1, 4), npts(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        size_t d = dims(rng), m = npts(rng);
        QMat pts;
        for (size_t i = 0; i < m; ++i) {
            QVec p(d);
            for (auto& x : p) x = coord(rng);
            pts.push_back(std::move(p));
        }
        HStarVector h = hstar(pts);
        REQUIRE(h.psi[0] == 1);
        Int total = 0;
        for (const Int& p : h.psi) {
            REQUIRE(p >= 0);
            total += p;
        }
        REQUIRE(Rat(total) == normalized_volume(pts));
    }
}

TEST_CASE("face polynomials evaluate to signed volumes at one") {
    UPoly sq = e_theta(qmat(IMat{{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    REQUIRE(sq == UPoly{Rat(-3), Rat(1)});
    REQUIRE(sq(Rat(1)) == -2);

    UPoly seg = e_theta(qmat(IMat{{0}, {1}}));
    REQUIRE(seg == UPoly{Rat(1)});

    UPoly tri = e_theta(qmat(IMat{{1, 0}, {0, 1}, {-1, -1}}));
    REQUIRE(tri == UPoly{Rat(-3)});

    // the recentred quintic simplex as a single top face
    UPoly quintic = e_theta(newton_simplex(4).vertices());
    REQUIRE(quintic(Rat(1)) == -625);

    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> coord(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        size_t d = 1 + trial % 3;
        QMat pts;
        for (size_t i = 0; i < d + 2; ++i) {
            QVec p(d);
            for (auto& x : p) x = coord(rng);
            pts.push_back(std::move(p));
        }
        HStarVector h = hstar(pts);
        if (h.dim == 0) continue;
        Rat v = normalized_volume(pts);
        Rat sign = (h.dim % 2) ? 1 : -1;
        REQUIRE(e_theta_from(h)(Rat(1)) == sign * v);
    }
}

TEST_CASE("zero-dimensional faces have no face polynomial") {
    REQUIRE_THROWS_AS(e_theta(QMat{{1, 1}}), ZeroDimensionalFace);
}

TEST_CASE("triangulations cover the polytope volume") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        Polytope P = random_polytope(rng, 3, 3, 8);
        Rat total = 0;
        for (const std::vector<int>& s : simplices_of(P)) {
            REQUIRE(s.size() == 4);
            QMat verts;
            for (int i : s) verts.push_back(P.vertices()[size_t(i)]);
            total += normalized_volume(verts);
        }
        REQUIRE(total == normalized_volume(P));
    }
}
