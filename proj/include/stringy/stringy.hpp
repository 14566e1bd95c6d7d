#pragma once

#include "stringy/genfun.hpp"
#include "stringy/mavlyutov.hpp"

namespace stringy {

struct FaceTerm {
    size_t face = 0;
    size_t dim = 0;
    Rat volume;     // of the face
    Rat cap_volume; // of the polar cap of its normal cone
    Rat term;       // signed contribution
};

namespace detail {

inline Normalized normalize_for_estr(const Polytope& P) {
    try {
        return normalize_cy(P);
    } catch (const NotNormalized& e) {
        throw NotAlmostPseudoreflexive(e.what());
    }
}

} // namespace detail

// Per-face contributions (-1)^(dim-1) vol(face) * vol(normal cap) over the
// faces of positive dimension, the top face included. Input already
// normalized.
inline std::vector<FaceTerm> estr_general_terms(const Polytope& D) {
    const FaceLattice& L = D.face_lattice();
    std::vector<FaceTerm> out;
    for (size_t fid = 0; fid < L.faces.size(); ++fid) {
        const Face& F = L.faces[fid];
        if (F.dim < 1) continue;
        FaceTerm t;
        t.face = fid;
        t.dim = size_t(F.dim);
        t.volume = face_volume(D, fid);
        QMat cap;
        cap.push_back(QVec(D.ambient(), Rat(0)));
        for (int f : F.tight_facets) {
            const Facet& ft = D.facets()[f];
            QVec y(D.ambient());
            for (size_t j = 0; j < D.ambient(); ++j) y[j] = Rat(ft.normal[j]) / (-ft.offset);
            cap.push_back(std::move(y));
        }
        t.cap_volume = normalized_volume(cap);
        t.term = t.volume * t.cap_volume;
        if (t.dim % 2 == 0) t.term = -t.term;
        out.push_back(std::move(t));
    }
    return out;
}

inline Rat estr_general(const Polytope& P) {
    Normalized N = detail::normalize_for_estr(P);
    Rat s = 0;
    for (const FaceTerm& t : estr_general_terms(N.polytope)) s += t.term;
    return s;
}

// E(X; u, 1) as a rational function: Ehrhart data per face times the graded
// series of its normal cone, balanced by powers of (1-u).
inline RationalFunctionUQ efun_u_normalized(const Polytope& D) {
    const FaceLattice& L = D.face_lattice();
    size_t d = D.ambient();
    RationalFunctionUQ total;
    for (size_t fid = 0; fid < L.faces.size(); ++fid) {
        const Face& F = L.faces[fid];
        if (F.dim < 1) continue;
        QMat pts = face_points(D, fid);
        UPoly E = e_theta(pts);
        IVec m = neg(to_ivec(pts[0]));
        RationalFunctionUQ R = R_cone(D.normal_cone(fid), m, true);
        RationalFunctionUQ term = RationalFunctionUQ(std::move(E)) * R;
        term = term * RationalFunctionUQ(UPoly::one_minus_power(1).pow(d - size_t(F.dim)));
        total = total + term;
    }
    return total;
}

inline RationalFunctionUQ efun_u(const Polytope& P) {
    return efun_u_normalized(detail::normalize_for_estr(P).polytope);
}

// Stringy Euler number of a reflexive polytope from face and dual-face
// volumes alone.
inline Rat estr_reflexive(const Polytope& P) {
    ClassifyResult C = classify(P);
    if (C.verdict != CYClass::Reflexive)
        throw NotReflexive("dual-face volumes compute the stringy Euler number only for reflexive inputs");
    Polytope D = P.translated(C.translation);
    const FaceLattice& L = D.face_lattice();
    size_t d = D.ambient();
    Rat s = 0;
    for (size_t fid = 0; fid < L.faces.size(); ++fid) {
        const Face& F = L.faces[fid];
        if (F.dim < 1 || size_t(F.dim) > d - 2) continue;
        Rat term = face_volume(D, fid) * normalized_volume(D.dual_face_vertices(fid));
        s += (F.dim % 2) ? term : -term;
    }
    return s;
}

struct SingularFacetInfo {
    size_t face = 0;
    Int distance;
    Rat volume;
    Rat product; // distance * volume
};

inline std::vector<SingularFacetInfo> singular_facets(const Polytope& D) {
    const FaceLattice& L = D.face_lattice();
    std::vector<SingularFacetInfo> out;
    for (size_t fid = 0; fid < L.faces.size(); ++fid) {
        const Face& F = L.faces[fid];
        if (size_t(F.dim) + 1 != D.ambient()) continue;
        const Facet& f = D.facets()[F.tight_facets[0]];
        Rat dist = -f.offset;
        if (!is_integer(dist) || dist < 1) throw InternalCheck("facet distance must be a positive integer");
        if (dist < 2) continue;
        SingularFacetInfo info;
        info.face = fid;
        info.distance = dist.get_num();
        info.volume = face_volume(D, fid);
        info.product = dist * info.volume;
        out.push_back(std::move(info));
    }
    return out;
}

namespace detail {

// Signed sum of vol(face) * vol(dual face) over the regular faces of middle
// dimension.
inline Rat regular_face_sum(const DualityPair& pair) {
    const Polytope& D = pair.delta;
    const FaceLattice& L = D.face_lattice();
    size_t d = D.ambient();
    Rat s = 0;
    for (size_t fid = 0; fid < L.faces.size(); ++fid) {
        const Face& F = L.faces[fid];
        if (F.dim < 1 || size_t(F.dim) > d - 2) continue;
        std::vector<int> G = mav_dual_vertex_set(pair, fid);
        if (G.empty()) continue;
        QMat pts;
        for (int u : G) pts.push_back(pair.dual.vertices()[u]);
        if (affine_rank(pts) != d - size_t(F.dim) - 1) continue;
        Rat term = face_volume(D, fid) * normalized_volume(pts);
        s += (F.dim % 2) ? term : -term;
    }
    return s;
}

inline Rat signed_singular_sum(const Polytope& D) {
    Rat s = 0;
    for (const SingularFacetInfo& f : singular_facets(D)) s += f.product;
    return (D.ambient() % 2) ? s : -s;
}

// Face-term sum for a polytope already recentred with its fine interior at
// the origin. Either member of a validated duality pair qualifies: the
// normalized input by construction, and the dual because duals of such
// polytopes are pseudoreflexive. Skips the interior computation estr_general
// would redo, which matters in high dimension.
inline Rat estr_sum_normalized(const Polytope& D) {
    Rat s = 0;
    for (const FaceTerm& t : estr_general_terms(D)) s += t.term;
    return s;
}

} // namespace detail

// Stringy Euler number of a pseudoreflexive polytope assembled from
// conditional data: singular facets of the dual, regular middle faces, and
// singular facets of the input.
inline Rat estr_cond(const Polytope& P) {
    DualityPair pair = [&] {
        try {
            return duality_pair(P, true);
        } catch (const NotNormalized& e) {
            throw NotPseudoreflexive(e.what());
        }
    }();
    Rat s = 0;
    for (const SingularFacetInfo& f : singular_facets(pair.dual)) s += f.product;
    s += detail::regular_face_sum(pair);
    s += detail::signed_singular_sum(pair.delta);
    return s;
}

struct MirrorReport {
    Rat e_delta;
    Rat e_dual;
    int sign = 1; // (-1)^(d-1)
    bool pass = false;
};

inline MirrorReport mirror_test(const Polytope& P) {
    Normalized N = detail::normalize_for_estr(P);
    Polytope W = mav_dual(N.polytope);
    MirrorReport r;
    r.e_delta = detail::estr_sum_normalized(N.polytope);
    r.e_dual = detail::estr_sum_normalized(W);
    r.sign = (P.ambient() % 2) ? 1 : -1;
    r.pass = r.e_delta == Rat(r.sign) * r.e_dual;
    return r;
}

struct QuasiRegularReport {
    std::vector<SingularFacetInfo> facets; // singular facets of the input
    Rat residual;                          // dual-side excess of the face-sum formula
    bool single_singular = false;
    std::optional<bool> quasi_regular;     // set when exactly one singular facet
};

// Compares the dual-side stringy Euler number against its conditional
// reconstruction; with a single singular facet, matching the facet's
// distance * volume certifies quasi-regularity.
inline QuasiRegularReport quasi_regular_report(const Polytope& P) {
    DualityPair pair = [&] {
        try {
            return duality_pair(P, true);
        } catch (const NotNormalized& e) {
            throw NotPseudoreflexive(e.what());
        }
    }();
    QuasiRegularReport out;
    out.facets = singular_facets(pair.delta);
    DualityPair rev = reversed(pair);
    Rat e_dual = detail::estr_sum_normalized(pair.dual);
    out.residual = e_dual - detail::regular_face_sum(rev) - detail::signed_singular_sum(pair.dual);
    out.single_singular = out.facets.size() == 1;
    if (out.single_singular) out.quasi_regular = out.residual == out.facets[0].product;
    return out;
}

struct StringyReport {
    std::string id;
    CYClass verdict = CYClass::AlmostPseudoreflexive;
    IVec translation;
    Rat e_str;
    std::vector<FaceTerm> terms;
    RationalFunctionUQ efun;
    bool efun_polynomial = false;
    bool symmetry_ok = false;
    bool integral = false;
    Int denominator;
};

inline StringyReport stringy_report(const Polytope& P, std::string id = "") {
    ClassifyResult C = classify(P);
    if (C.verdict == CYClass::NoMinimalModel)
        throw EmptyFineInterior("the fine interior is empty");
    if (C.verdict == CYClass::MinimalNotCY)
        throw NotAlmostPseudoreflexive("the fine interior is not a single lattice point");
    Polytope D = P.translated(C.translation);
    StringyReport R;
    R.id = std::move(id);
    R.verdict = C.verdict;
    R.translation = C.translation;
    R.terms = estr_general_terms(D);
    R.e_str = 0;
    for (const FaceTerm& t : R.terms) R.e_str += t.term;
    R.efun = efun_u_normalized(D);
    R.efun_polynomial = R.efun.is_polynomial();
    size_t d = D.ambient();
    RationalFunctionUQ mirror_side =
        RationalFunctionUQ(UPoly::monomial(Rat(1), d - 1)) * R.efun.substitute_reciprocal();
    R.symmetry_ok = mirror_side == R.efun;
    Rat limit;
    try {
        limit = R.efun.evaluate(1);
    } catch (const PoleEvaluation&) {
        throw InternalCheck("the stringy series must stay finite at 1");
    }
    if (limit != R.e_str) throw InternalCheck("face sums and the series limit disagree");
    R.integral = is_integer(R.e_str);
    R.denominator = R.e_str.get_den();
    return R;
}

} // namespace stringy
