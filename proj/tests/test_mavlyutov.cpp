#include "helpers.hpp"

#include <stringy/mavlyutov.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace stringy;
using namespace testutil;

TEST_CASE("lattice duals of familiar reflexive polytopes") {
    REQUIRE(sortedq(mav_dual(cube(3)).vertices()) == sortedq(cross(3).vertices()));
    REQUIRE(sortedq(mav_dual(cross(3)).vertices()) == sortedq(cube(3).vertices()));
    REQUIRE(sortedq(mav_dual(fan_simplex(3)).vertices()) ==
            sortedq(newton_simplex(3).vertices()));
    REQUIRE(sortedq(mav_dual(newton_simplex(3)).vertices()) ==
            sortedq(fan_simplex(3).vertices()));
}

TEST_CASE("the dual is an involution on polytopes with reflexive-like duals") {
    for (const Polytope& P : {cube(3), cross(4), fan_simplex(2), newton_simplex(4)}) {
        Polytope DD = mav_dual(mav_dual(P));
        REQUIRE(sortedq(DD.vertices()) == sortedq(P.vertices()));
    }
    // off the pseudoreflexive case the double dual lands on the closure instead
    Polytope slab = sum_slab(4, 1, 5).translated(IVec{1, 1, 1, 1});
    Polytope dd = mav_dual(mav_dual(slab));
    REQUIRE(sortedq(dd.vertices()) != sortedq(slab.vertices()));
    REQUIRE(sortedq(dd.vertices()) == sortedq(newton_simplex(4).vertices()));
    REQUIRE(sortedq(dd.vertices()) == sortedq(pseudoreflexive_closure(slab).vertices()));
}

TEST_CASE("dual of a non-reflexive input picks up the lattice hull") {
    // conv{e1, e2, e3, (-1,-1,-2)} has a rational polar; its dual rounds inward
    Polytope P = closure_example();
    Polytope D = mav_dual(P);
    QMat expect = qmat(IMat{
        {-1, -1, -1}, {-1, -1, 1}, {-1, 0, 1}, {-1, 4, -1}, {0, -1, 1}, {4, -1, -1}});
    REQUIRE(sortedq(D.vertices()) == sortedq(expect));
}

TEST_CASE("double dual closure contains the input and stabilizes") {
    Polytope P = closure_example();
    Polytope C = pseudoreflexive_closure(P);
    QMat expect = qmat(IMat{{-1, -1, -2}, {0, 0, -1}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    REQUIRE(sortedq(C.vertices()) == sortedq(expect));
    for (const QVec& v : P.vertices()) REQUIRE(C.contains(v));
    REQUIRE(classify(C).verdict == CYClass::Reflexive);

    Polytope CC = pseudoreflexive_closure(C);
    REQUIRE(sortedq(CC.vertices()) == sortedq(C.vertices()));

    Polytope K = pseudoreflexive_closure(cube(3));
    REQUIRE(sortedq(K.vertices()) == sortedq(cube(3).vertices()));
}

TEST_CASE("closure works through a normalizing translation") {
    Polytope P = closure_example().translated(IVec{2, -1, 3});
    Polytope C = pseudoreflexive_closure(P);
    QMat expect = qmat(IMat{{-3, 0, -5}, {-2, 1, -4}, {-2, 1, -2}, {-2, 2, -3}, {-1, 1, -3}});
    REQUIRE(sortedq(C.vertices()) == sortedq(expect));
}

TEST_CASE("duality pairs normalize, translate, and reverse") {
    DualityPair pc = duality_pair(cube(3));
    REQUIRE(sortedq(pc.delta.vertices()) == sortedq(cube(3).vertices()));
    REQUIRE(sortedq(pc.dual.vertices()) == sortedq(cross(3).vertices()));
    REQUIRE(pc.translation == IVec{0, 0, 0});

    DualityPair rev = reversed(pc);
    REQUIRE(sortedq(rev.delta.vertices()) == sortedq(cross(3).vertices()));
    REQUIRE(sortedq(rev.dual.vertices()) == sortedq(cube(3).vertices()));

    Polytope quint = sum_slab(4, 1, 5);
    DualityPair pq = duality_pair(quint, false);
    REQUIRE(pq.translation == IVec{1, 1, 1, 1});
    REQUIRE(sortedq(pq.dual.vertices()) == sortedq(fan_simplex(4).vertices()));

    REQUIRE_THROWS_AS(duality_pair(quint), NotPseudoreflexive);
    REQUIRE_THROWS_AS(duality_pair(Polytope::hull(IMat{{0, 0}, {2, 0}, {0, 2}})),
                      EmptyFineInterior);
    REQUIRE_THROWS_AS(duality_pair(corti_simplex()), NotNormalized);
}

TEST_CASE("every proper face of a reflexive pair is regular and ordinary") {
    DualityPair pc = duality_pair(cube(3));
    const FaceLattice& L = pc.delta.face_lattice();
    for (size_t id = 0; id < L.faces.size(); ++id) {
        if (size_t(L.faces[id].dim) >= pc.delta.ambient()) continue;
        FaceClass fc = face_class(pc, id);
        REQUIRE(fc.regular);
        REQUIRE(fc.ordinary);
        REQUIRE_FALSE(fc.dual_empty);
        REQUIRE(fc.dim + fc.dual_dim + 1 == pc.delta.ambient());
        if (fc.dim + 1 == pc.delta.ambient()) {
            REQUIRE(fc.facet_distance.has_value());
            REQUIRE(*fc.facet_distance == 1);
        } else {
            REQUIRE_FALSE(fc.facet_distance.has_value());
        }
    }
    REQUIRE_THROWS_AS(face_class(pc, pc.delta.top_face()), InvalidParams);
}

TEST_CASE("regular faces dualize to faces of the dual, and back") {
    DualityPair pc = duality_pair(cube(3));
    DualityPair rev = reversed(pc);
    const FaceLattice& L = pc.delta.face_lattice();
    for (size_t id = 0; id < L.faces.size(); ++id) {
        if (size_t(L.faces[id].dim) >= pc.delta.ambient()) continue;
        size_t dual_id = face_dual(pc, id);
        REQUIRE(size_t(pc.dual.face(dual_id).dim) + size_t(L.faces[id].dim) + 1 ==
                pc.delta.ambient());
        REQUIRE(face_dual(rev, dual_id) == id);
    }
}

TEST_CASE("face classes flag the singular facet of a pseudoreflexive slab") {
    Polytope slab5 = Polytope::hull(IMat{
        {-1, -1, -1, -1, -1}, {-1, -1, -1, -1, 2}, {-1, -1, -1, 0, 2}, {-1, -1, -1, 6, -1},
        {-1, -1, 0, -1, 2},   {-1, -1, 6, -1, -1}, {-1, 0, -1, -1, 2}, {-1, 6, -1, -1, -1},
        {0, -1, -1, -1, 2},   {6, -1, -1, -1, -1}});
    DualityPair p = duality_pair(slab5);
    QMat simplex5 = qmat(IMat{{-1, -1, -1, -1, -2}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0},
                              {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}});
    REQUIRE(sortedq(p.dual.vertices()) == sortedq(simplex5));

    const FaceLattice& L = p.delta.face_lattice();
    size_t proper = 0, regular = 0, dual_empty = 0, ordinary = 0;
    std::vector<Int> distances;
    for (size_t id = 0; id < L.faces.size(); ++id) {
        if (size_t(L.faces[id].dim) >= p.delta.ambient()) continue;
        FaceClass fc = face_class(p, id);
        ++proper;
        if (fc.regular) ++regular;
        if (fc.dual_empty) ++dual_empty;
        if (fc.ordinary) ++ordinary;
        if (fc.facet_distance) distances.push_back(*fc.facet_distance);
        // the lone facet at lattice distance two pairs with nothing and
        // its cone grading leaves the integer levels
        if (fc.facet_distance && *fc.facet_distance == 2) {
            REQUIRE(fc.dual_empty);
            REQUIRE_FALSE(fc.ordinary);
        }
    }
    REQUIRE(proper == 92);
    REQUIRE(regular == 61);
    REQUIRE(dual_empty == 1);
    REQUIRE(ordinary == 91);
    std::sort(distances.begin(), distances.end());
    REQUIRE(distances == std::vector<Int>{1, 1, 1, 1, 1, 1, 2});

    // duals of regular faces are faces of the dual, and the pairing reverses
    DualityPair rev = reversed(p);
    for (size_t id = 0; id < L.faces.size(); ++id) {
        if (size_t(L.faces[id].dim) >= p.delta.ambient()) continue;
        FaceClass fc = face_class(p, id);
        if (!fc.regular) continue;
        size_t did = face_dual(p, id);
        REQUIRE(face_dual(rev, did) == id);
    }
}
