#include "helpers.hpp"

#include <stringy/stringy.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace stringy;
using namespace testutil;

namespace {

Polytope quint_mirror_slab() {
    return Polytope::hull(IMat{
        {-1, -1, -1, -1, -1}, {-1, -1, -1, -1, 2}, {-1, -1, -1, 0, 2}, {-1, -1, -1, 6, -1},
        {-1, -1, 0, -1, 2},   {-1, -1, 6, -1, -1}, {-1, 0, -1, -1, 2}, {-1, 6, -1, -1, -1},
        {0, -1, -1, -1, 2},   {6, -1, -1, -1, -1}});
}

} // namespace

TEST_CASE("stringy euler numbers of known polytopes") {
    REQUIRE(estr_general(cube(3)) == 24);
    REQUIRE(estr_general(newton_simplex(3)) == 24);
    REQUIRE(estr_general(cube(4)) == -128);
    REQUIRE(estr_general(cross(4)) == 128);
    REQUIRE(estr_general(newton_simplex(4)) == -200);
    REQUIRE(estr_general(fan_simplex(4)) == 200);
    REQUIRE(estr_general(sum_slab(4, 1, 5)) == -200);
    REQUIRE(estr_general(sum_slab(4, 2, 5)) == -198);
}

TEST_CASE("per-dimension face contributions of the quintic slab") {
    Normalized N = normalize_cy(sum_slab(4, 1, 5));
    std::map<size_t, Rat> by_dim;
    for (const FaceTerm& t : estr_general_terms(N.polytope)) by_dim[t.dim] += t.term;
    REQUIRE(by_dim.size() == 4);
    REQUIRE(by_dim[1] == 48);
    REQUIRE(by_dim[2] == Rat(-736, 3));
    REQUIRE(by_dim[3] == Rat(1864, 3));
    REQUIRE(by_dim[4] == -624);

    by_dim.clear();
    Normalized N2 = normalize_cy(sum_slab(4, 2, 5));
    for (const FaceTerm& t : estr_general_terms(N2.polytope)) by_dim[t.dim] += t.term;
    REQUIRE(by_dim[1] == 48);
    REQUIRE(by_dim[2] == -234);
    REQUIRE(by_dim[3] == 597);
    REQUIRE(by_dim[4] == -609);
}

TEST_CASE("the dual-volume shortcut agrees on reflexive input and refuses the rest") {
    for (const Polytope& P : {cube(3), cube(4), cross(4), newton_simplex(3), newton_simplex(4)})
        REQUIRE(estr_reflexive(P) == estr_general(P));
    REQUIRE_THROWS_AS(estr_reflexive(sum_slab(4, 1, 5)), NotReflexive);
    REQUIRE_THROWS_AS(estr_reflexive(quint_mirror_slab()), NotReflexive);
}

TEST_CASE("singular facets are the facets at lattice distance two or more") {
    REQUIRE(singular_facets(cube(3)).empty());
    REQUIRE(singular_facets(newton_simplex(4)).empty());

    std::vector<SingularFacetInfo> slab = singular_facets(quint_mirror_slab());
    REQUIRE(slab.size() == 1);
    REQUIRE(slab[0].distance == 2);
    REQUIRE(slab[0].volume == 1);
    REQUIRE(slab[0].product == 2);

    Normalized N2 = normalize_cy(sum_slab(4, 2, 5));
    std::vector<SingularFacetInfo> q2 = singular_facets(N2.polytope);
    REQUIRE(q2.size() == 1);
    REQUIRE(q2[0].distance == 2);
    REQUIRE(q2[0].volume == 8);
    REQUIRE(q2[0].product == 16);
}

TEST_CASE("conditional reconstruction matches the direct face sum") {
    REQUIRE(estr_cond(cube(3)) == 24);
    REQUIRE(estr_cond(cube(4)) == -128);
    REQUIRE(estr_cond(newton_simplex(3)) == 24);
    REQUIRE(estr_cond(quint_mirror_slab()) == 2784);
    REQUIRE_THROWS_AS(estr_cond(sum_slab(4, 2, 5)), NotPseudoreflexive);
}

TEST_CASE("mirror pairs carry opposite-signed stringy euler numbers in even dimension") {
    MirrorReport quint = mirror_test(sum_slab(4, 1, 5));
    REQUIRE(quint.e_delta == -200);
    REQUIRE(quint.e_dual == 200);
    REQUIRE(quint.sign == -1);
    REQUIRE(quint.pass);

    MirrorReport k3 = mirror_test(newton_simplex(3));
    REQUIRE(k3.e_delta == 24);
    REQUIRE(k3.e_dual == 24);
    REQUIRE(k3.sign == 1);
    REQUIRE(k3.pass);

    MirrorReport big = mirror_test(quint_mirror_slab());
    REQUIRE(big.e_delta == 2784);
    REQUIRE(big.e_dual == 2784);
    REQUIRE(big.sign == 1);
    REQUIRE(big.pass);
}

TEST_CASE("one singular facet whose excess matches certifies quasi-regularity") {
    QuasiRegularReport r = quasi_regular_report(quint_mirror_slab());
    REQUIRE(r.single_singular);
    REQUIRE(r.facets.size() == 1);
    REQUIRE(r.facets[0].product == 2);
    REQUIRE(r.residual == 2);
    REQUIRE(r.quasi_regular.has_value());
    REQUIRE(*r.quasi_regular);

    QuasiRegularReport c = quasi_regular_report(cube(3));
    REQUIRE(c.facets.empty());
    REQUIRE_FALSE(c.single_singular);
    REQUIRE_FALSE(c.quasi_regular.has_value());
    REQUIRE(c.residual == 0);
}

TEST_CASE("the stringy series of the quintic slab is the hodge-weighted polynomial") {
    RationalFunctionUQ f = efun_u(sum_slab(4, 1, 5));
    REQUIRE(f.is_polynomial());
    REQUIRE(f.as_polynomial() == UPoly{Rat(0), Rat(-100), Rat(-100)});
    REQUIRE(f.evaluate(1) == -200);
}

TEST_CASE("full reports bundle verdict, face terms, series, and symmetry") {
    StringyReport r = stringy_report(newton_simplex(4), "newton");
    REQUIRE(r.id == "newton");
    REQUIRE(r.verdict == CYClass::Reflexive);
    REQUIRE(r.translation == IVec{0, 0, 0, 0});
    REQUIRE(r.e_str == -200);
    REQUIRE(r.integral);
    REQUIRE(r.denominator == 1);
    REQUIRE(r.symmetry_ok);
    REQUIRE(r.efun_polynomial);
    REQUIRE(r.efun.as_polynomial() == UPoly{Rat(0), Rat(-100), Rat(-100)});
    REQUIRE(r.terms.size() == 26);
    Rat total = 0;
    for (const FaceTerm& t : r.terms) total += t.term;
    REQUIRE(total == r.e_str);

    StringyReport q2 = stringy_report(sum_slab(4, 2, 5));
    REQUIRE(q2.id.empty());
    REQUIRE(q2.verdict == CYClass::AlmostPseudoreflexive);
    REQUIRE(q2.translation == IVec{1, 1, 1, 1});
    REQUIRE(q2.e_str == -198);
    REQUIRE(q2.integral);
    REQUIRE(q2.symmetry_ok);
}

TEST_CASE("reports refuse inputs without the calabi-yau structure") {
    REQUIRE_THROWS_AS(estr_general(corti_simplex()), NotAlmostPseudoreflexive);
    REQUIRE_THROWS_AS(stringy_report(corti_simplex()), NotAlmostPseudoreflexive);
    Polytope no_interior = Polytope::hull(IMat{
        {0, 0, 0, 0}, {4, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 4, 0}, {0, 0, 0, 4}});
    REQUIRE_THROWS_AS(estr_general(no_interior), EmptyFineInterior);
    REQUIRE_THROWS_AS(stringy_report(no_interior), EmptyFineInterior);
    REQUIRE_THROWS_AS(efun_u(no_interior), EmptyFineInterior);
}
