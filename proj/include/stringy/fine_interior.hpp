#pragma once

#include "stringy/lattice_points.hpp"

namespace stringy {

enum class CYClass {
    NoMinimalModel,         // fine interior empty
    MinimalNotCY,           // fine interior positive dimensional or a non-lattice point
    AlmostPseudoreflexive,  // fine interior a single lattice point
    Pseudoreflexive,        // additionally equal to the closure of its double dual
    Reflexive               // additionally with a lattice polar
};

inline const char* to_string(CYClass c) {
    switch (c) {
        case CYClass::NoMinimalModel: return "no-minimal-model";
        case CYClass::MinimalNotCY: return "minimal-not-cy";
        case CYClass::AlmostPseudoreflexive: return "almost-pseudoreflexive";
        case CYClass::Pseudoreflexive: return "pseudoreflexive";
        case CYClass::Reflexive: return "reflexive";
    }
    return "?";
}

// Union of the Hilbert bases of the vertex normal cones: a finite cut set
// whose shifted inequalities carve out the fine interior.
inline IMat fine_cut_normals(const Polytope& P) {
    if (!P.is_lattice()) throw NonLatticeVertices("fine interior needs a lattice polytope");
    const FaceLattice& L = P.face_lattice();
    std::set<IVec, LexLessI> H;
    for (size_t fid = 0; fid < L.faces.size(); ++fid) {
        if (L.faces[fid].dim != 0) continue;
        for (IVec& h : hilbert_basis(P.normal_cone(fid))) H.insert(std::move(h));
    }
    return {H.begin(), H.end()};
}

struct FineResult {
    bool interior_empty = true;
    QMat interior_vertices;            // vertices of the fine interior
    size_t interior_dim = 0;
    IMat support;                      // directions whose shifted cut stays tight
    bool hull_bounded = false;
    std::optional<Polytope> canonical; // intersection of unshifted support halfspaces
};

namespace detail {

// Region carved by the facet inequalities alone, each shifted inward by one.
// Facet normals are extreme rays of the vertex normal cones, hence members of
// every cut set, so this region contains the fine interior. Emptiness is
// therefore decisive, and so is a single lattice vertex: such a point clears
// every facet by at least one, so every order satisfies ord(n) <= <n,p> - 1
// and the point meets all remaining shifted cuts as well.
inline Region facet_screen(const Polytope& P) {
    std::vector<HalfspaceCut> cuts;
    cuts.reserve(P.facets().size());
    for (const Facet& f : P.facets()) cuts.push_back({f.normal, f.offset + 1});
    return enumerate_vertices(cuts, P.ambient());
}

inline bool screen_pins_lattice_point(const Region& r) {
    return !r.empty && r.bounded && r.vertices.size() == 1 && is_integral(r.vertices[0]);
}

} // namespace detail

inline FineResult fine(const Polytope& P) {
    if (!P.is_lattice()) throw NonLatticeVertices("fine interior needs a lattice polytope");
    FineResult out;
    Region screen = detail::facet_screen(P);
    if (screen.empty) return out;
    if (detail::screen_pins_lattice_point(screen)) {
        out.interior_empty = false;
        out.interior_vertices = QMat{screen.vertices[0]};
        out.interior_dim = 0;
        IVec t = to_ivec(screen.vertices[0]);
        Polytope D = P.translated(t);
        // The tight directions are exactly the nonzero lattice points of the
        // polar of the recentred polytope: each sits at order -1, and none
        // splits as a sum of two nonzero vectors of its vertex normal cone
        // (both parts would have negative order, pushing the sum below -1),
        // so each belongs to the corresponding Hilbert basis.
        for (IVec& n : points_in(D.polar()))
            if (!is_zero(n)) out.support.push_back(std::move(n));
        // A support direction that is a convex combination of others yields a
        // redundant unshifted cut, so the canonical hull is the polar of the
        // lattice hull of the support, shifted back to the input frame.
        LatticeHull W = lattice_hull_of_points(out.support, P.ambient());
        if (W.full) {
            try {
                Polytope C = W.full->polar().translated(neg(t));
                C.set_side(P.side());
                out.hull_bounded = true;
                out.canonical = std::move(C);
            } catch (const OriginNotInterior&) {
            }
        }
        return out;
    }
    IMat H = fine_cut_normals(P);
    std::vector<HalfspaceCut> cuts;
    std::vector<Rat> ords;
    cuts.reserve(H.size());
    for (const IVec& n : H) {
        Rat o = P.ord(n);
        cuts.push_back({n, o + 1});
        ords.push_back(std::move(o));
    }
    Region reg = enumerate_vertices(cuts, P.ambient());
    if (reg.empty) return out;
    if (!reg.bounded) throw InternalCheck("fine interior must be bounded");
    out.interior_empty = false;
    out.interior_vertices = std::move(reg.vertices);
    out.interior_dim = affine_rank(out.interior_vertices);
    for (size_t i = 0; i < H.size(); ++i) {
        Rat lo = dotq(H[i], out.interior_vertices[0]);
        for (const QVec& v : out.interior_vertices) {
            Rat s = dotq(H[i], v);
            if (s < lo) lo = s;
        }
        if (lo == ords[i] + 1) out.support.push_back(H[i]);
    }
    if (!out.support.empty()) {
        std::vector<HalfspaceCut> hc;
        for (const IVec& n : out.support) hc.push_back({n, P.ord(n)});
        Region hull = enumerate_vertices(hc, P.ambient());
        if (!hull.empty && hull.bounded) {
            out.hull_bounded = true;
            out.canonical = Polytope::hull(std::move(hull.vertices), P.side());
        }
    }
    return out;
}

inline IMat support(const Polytope& P) {
    FineResult fr = fine(P);
    if (fr.interior_empty) throw EmptyFineInterior("the fine interior is empty");
    return fr.support;
}

inline Polytope canonical_hull(const Polytope& P) {
    FineResult fr = fine(P);
    if (fr.interior_empty) throw EmptyFineInterior("the fine interior is empty");
    if (!fr.hull_bounded) throw UnboundedRegion("support cuts do not bound a region");
    return *fr.canonical;
}

struct ClassifyResult {
    CYClass verdict = CYClass::NoMinimalModel;
    IVec translation; // normalized polytope = input translated by this
    FineResult fine;
};

inline ClassifyResult classify(const Polytope& P) {
    ClassifyResult R;
    R.translation = IVec(P.ambient(), 0);
    R.fine = fine(P);
    if (R.fine.interior_empty) return R;
    if (R.fine.interior_dim >= 1) {
        R.verdict = CYClass::MinimalNotCY;
        return R;
    }
    const QVec& p = R.fine.interior_vertices[0];
    if (!is_integral(p)) {
        R.verdict = CYClass::MinimalNotCY;
        return R;
    }
    R.translation = to_ivec(p);
    Polytope D = P.translated(R.translation);
    Polytope polar = D.polar();
    if (polar.is_lattice()) {
        R.verdict = CYClass::Reflexive;
        return R;
    }
    R.verdict = CYClass::AlmostPseudoreflexive;
    LatticeHull W = lattice_hull(polar);
    if (!W.full) return R;
    try {
        // D is contained in the polar of its dual hull, so equality of the
        // closure with D amounts to every lattice point in there lying in D.
        Polytope B = W.full->polar();
        bool inside = true;
        for (const IVec& x : points_in(B))
            if (!D.contains(to_qvec(x))) {
                inside = false;
                break;
            }
        if (inside) R.verdict = CYClass::Pseudoreflexive;
    } catch (const OriginNotInterior&) {
    }
    return R;
}

struct Normalized {
    Polytope polytope;
    IVec translation;
};

// Translate so the fine interior sits at the origin; the fine interior must
// be a single lattice point.
inline Normalized normalize_cy(const Polytope& P) {
    if (!P.is_lattice()) throw NonLatticeVertices("fine interior needs a lattice polytope");
    Region screen = detail::facet_screen(P);
    if (screen.empty) throw EmptyFineInterior("the fine interior is empty");
    if (detail::screen_pins_lattice_point(screen)) {
        IVec t = to_ivec(screen.vertices[0]);
        return {P.translated(t), std::move(t)};
    }
    FineResult fr = fine(P);
    if (fr.interior_empty) throw EmptyFineInterior("the fine interior is empty");
    if (fr.interior_dim >= 1 || !is_integral(fr.interior_vertices[0]))
        throw NotNormalized("the fine interior is not a single lattice point");
    IVec t = to_ivec(fr.interior_vertices[0]);
    return {P.translated(t), std::move(t)};
}

// Log discrepancy -ord(n) - 1 of the divisor direction n, after normalization.
inline Int discrepancy(const Polytope& P, const IVec& n) {
    if (is_zero(n)) throw InvalidParams("discrepancy needs a nonzero lattice direction");
    Normalized N = normalize_cy(P);
    Rat a = -N.polytope.ord(n) - 1;
    if (!is_integer(a)) throw InternalCheck("integer discrepancy expected for a lattice direction");
    return a.get_num();
}

} // namespace stringy
