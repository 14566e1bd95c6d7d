#pragma once

#include "stringy/ehrhart.hpp"
#include "stringy/fine_interior.hpp"

namespace stringy {

// Lattice hull of the polar: the dual polytope on the opposite lattice side.
// The input is normalized first; its fine interior must be a single lattice
// point.
inline Polytope mav_dual(const Polytope& P) {
    Normalized N = normalize_cy(P);
    LatticeHull W = lattice_hull(N.polytope.polar());
    if (!W.full) throw InternalCheck("dual hull of a normalized polytope must be full dimensional");
    Polytope D = std::move(*W.full);
    D.set_side(flipped(P.side()));
    return D;
}

// Lattice hull of the polar of the dual, pulled back to the input
// coordinates. Contains the input; equality characterizes pseudoreflexivity.
inline Polytope pseudoreflexive_closure(const Polytope& P) {
    Normalized N = normalize_cy(P);
    LatticeHull W = lattice_hull(N.polytope.polar());
    if (!W.full) throw InternalCheck("dual hull of a normalized polytope must be full dimensional");
    LatticeHull closure = lattice_hull(W.full->polar());
    if (!closure.full) throw InternalCheck("closure must contain the full dimensional input");
    Polytope C = std::move(*closure.full);
    C.set_side(P.side());
    return C.translated(neg(N.translation));
}

struct DualityPair {
    Polytope delta; // normalized input
    Polytope dual;
    IVec translation;
};

inline DualityPair duality_pair(const Polytope& P, bool require_pseudoreflexive = true) {
    ClassifyResult C = classify(P);
    if (C.verdict == CYClass::NoMinimalModel)
        throw EmptyFineInterior("the fine interior is empty");
    if (C.verdict == CYClass::MinimalNotCY)
        throw NotNormalized("the fine interior is not a single lattice point");
    if (require_pseudoreflexive && C.verdict == CYClass::AlmostPseudoreflexive)
        throw NotPseudoreflexive("input is not pseudoreflexive");
    Polytope D = P.translated(C.translation);
    LatticeHull W = lattice_hull(D.polar());
    if (!W.full) throw InternalCheck("dual hull of a normalized polytope must be full dimensional");
    Polytope dual = std::move(*W.full);
    dual.set_side(flipped(P.side()));
    return {std::move(D), std::move(dual), C.translation};
}

inline DualityPair reversed(const DualityPair& pair) {
    return {pair.dual, pair.delta, IVec(pair.delta.ambient(), 0)};
}

// Indices of the dual's vertices pairing to -1 against the whole face: the
// vertex set of the dual face.
inline std::vector<int> mav_dual_vertex_set(const DualityPair& pair, size_t face_id) {
    const Face& F = pair.delta.face(face_id);
    std::vector<int> out;
    for (size_t u = 0; u < pair.dual.vertices().size(); ++u) {
        bool all = true;
        for (int vi : F.vertices)
            if (dotq(pair.dual.vertices()[u], pair.delta.vertices()[vi]) != -1) {
                all = false;
                break;
            }
        if (all) out.push_back(int(u));
    }
    return out;
}

struct FaceClass {
    size_t face = 0;
    size_t dim = 0;
    bool regular = false;      // dual face has the complementary dimension
    bool dual_empty = false;   // dual face carries no lattice points at all
    size_t dual_dim = 0;       // dimension of the dual face when nonempty
    bool ordinary = false;     // cone lattice points sit in integer dilates
    std::optional<Int> facet_distance;
};

inline FaceClass face_class(const DualityPair& pair, size_t face_id) {
    const Polytope& D = pair.delta;
    const Face& F = D.face(face_id);
    size_t d = D.ambient();
    if (size_t(F.dim) >= d) throw InvalidParams("face classification needs a proper face");
    FaceClass out;
    out.face = face_id;
    out.dim = size_t(F.dim);

    std::vector<int> G = mav_dual_vertex_set(pair, face_id);
    if (G.empty()) {
        out.dual_empty = true;
    } else {
        QMat pts;
        for (int u : G) pts.push_back(pair.dual.vertices()[u]);
        out.dual_dim = affine_rank(std::move(pts));
        out.regular = out.dual_dim == d - out.dim - 1;
    }

    IMat gens;
    for (int vi : F.vertices) gens.push_back(to_ivec(D.vertices()[vi]));
    Cone sigma = Cone::from_rays(std::move(gens), d);
    const Facet& f0 = D.facets()[F.tight_facets[0]];
    out.ordinary = true;
    for (const IVec& h : hilbert_basis(sigma)) {
        Rat level = Rat(dot(f0.normal, h)) / f0.offset;
        if (!is_integer(level)) {
            out.ordinary = false;
            break;
        }
    }

    if (out.dim + 1 == d) {
        Rat dist = -f0.offset;
        if (!is_integer(dist) || dist < 1) throw InternalCheck("facet distance must be a positive integer");
        out.facet_distance = dist.get_num();
    }
    return out;
}

// Face of the dual paired with a regular face, as an id into the dual's face
// lattice.
inline size_t face_dual(const DualityPair& pair, size_t face_id) {
    FaceClass fc = face_class(pair, face_id);
    if (!fc.regular) throw SingularFace("the dual face degenerates; only regular faces dualize");
    std::vector<int> G = mav_dual_vertex_set(pair, face_id);
    const FaceLattice& L = pair.dual.face_lattice();
    for (size_t id = 0; id < L.faces.size(); ++id)
        if (L.faces[id].vertices == G) return id;
    throw InternalCheck("dual vertex set is not a face of the dual");
}

} // namespace stringy
