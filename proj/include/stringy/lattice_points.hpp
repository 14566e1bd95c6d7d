#pragma once

#include <functional>

#include "stringy/polyhedra.hpp"

namespace stringy {

namespace detail {

// Depth-first enumeration of { x in Z^d : normals[i] . x >= offsets[i], lo <= x <= hi },
// tightening coordinate intervals by constraint propagation at every level.
class PointSearch {
public:
    PointSearch(const IMat& normals, const std::vector<Int>& offsets,
                std::function<void(const IVec&)> emit)
        : normals_(normals), offsets_(offsets), emit_(std::move(emit)) {}

    void run(IVec lo, IVec hi) {
        d_ = lo.size();
        x_.assign(d_, 0);
        descend(std::move(lo), std::move(hi), offsets_, 0);
    }

private:
    bool propagate(IVec& lo, IVec& hi, const std::vector<Int>& rem, size_t level) const {
        for (int pass = 0; pass < 4; ++pass) {
            bool changed = false;
            for (size_t i = 0; i < normals_.size(); ++i) {
                const IVec& n = normals_[i];
                Int upper = 0; // max of the free part of <n, x>
                bool relevant = false;
                for (size_t s = level; s < d_; ++s) {
                    if (n[s] == 0) continue;
                    relevant = true;
                    upper += n[s] > 0 ? n[s] * hi[s] : n[s] * lo[s];
                }
                if (!relevant) {
                    if (rem[i] > 0) return false;
                    continue;
                }
                if (upper < rem[i]) return false;
                for (size_t t = level; t < d_; ++t) {
                    if (n[t] == 0) continue;
                    Int own = n[t] > 0 ? n[t] * hi[t] : n[t] * lo[t];
                    Int need = rem[i] - (upper - own); // n[t]*x_t >= need
                    if (n[t] > 0) {
                        Int nl = ceil_div(need, n[t]);
                        if (nl > lo[t]) {
                            lo[t] = nl;
                            changed = true;
                            if (lo[t] > hi[t]) return false;
                        }
                    } else {
                        Int nh = floor_div(need, n[t]);
                        if (nh < hi[t]) {
                            hi[t] = nh;
                            changed = true;
                            if (lo[t] > hi[t]) return false;
                        }
                    }
                }
            }
            if (!changed) break;
        }
        return true;
    }

    void descend(IVec lo, IVec hi, std::vector<Int> rem, size_t level) {
        if (!propagate(lo, hi, rem, level)) return;
        if (level == d_) {
            for (const Int& r : rem)
                if (r > 0) return;
            emit_(x_);
            return;
        }
        for (Int v = lo[level]; v <= hi[level]; ++v) {
            x_[level] = v;
            std::vector<Int> rem2 = rem;
            for (size_t i = 0; i < normals_.size(); ++i)
                if (normals_[i][level] != 0) rem2[i] -= normals_[i][level] * v;
            descend(lo, hi, std::move(rem2), level + 1);
        }
    }

    const IMat& normals_;
    const std::vector<Int>& offsets_;
    std::function<void(const IVec&)> emit_;
    size_t d_ = 0;
    IVec x_;
};

inline void integer_system(const std::vector<HalfspaceCut>& cuts, IMat& normals,
                           std::vector<Int>& offsets) {
    for (const HalfspaceCut& c : cuts) {
        Int den = c.offset.get_den();
        normals.push_back(scale(den, c.normal));
        offsets.push_back(c.offset.get_num());
    }
}

inline void vertex_box(const QMat& vertices, IVec& lo, IVec& hi) {
    size_t d = vertices[0].size();
    lo.assign(d, 0);
    hi.assign(d, 0);
    for (size_t j = 0; j < d; ++j) {
        Rat mn = vertices[0][j], mx = vertices[0][j];
        for (const QVec& v : vertices) {
            if (v[j] < mn) mn = v[j];
            if (v[j] > mx) mx = v[j];
        }
        lo[j] = ceil_rat(mn);
        hi[j] = floor_rat(mx);
    }
}

} // namespace detail

inline IMat points_in_system(const IMat& normals, const std::vector<Int>& offsets, IVec lo, IVec hi) {
    IMat out;
    detail::PointSearch search(normals, offsets, [&](const IVec& x) { out.push_back(x); });
    search.run(std::move(lo), std::move(hi));
    return out;
}

inline Int count_in_system(const IMat& normals, const std::vector<Int>& offsets, IVec lo, IVec hi) {
    Int n = 0;
    detail::PointSearch search(normals, offsets, [&](const IVec&) { ++n; });
    search.run(std::move(lo), std::move(hi));
    return n;
}

// All lattice points of a full-dimensional polytope, in lexicographic order.
inline IMat points_in(const Polytope& P) {
    IMat normals;
    std::vector<Int> offsets;
    std::vector<HalfspaceCut> cuts;
    for (const Facet& f : P.facets()) cuts.push_back({f.normal, f.offset});
    detail::integer_system(cuts, normals, offsets);
    IVec lo, hi;
    detail::vertex_box(P.vertices(), lo, hi);
    for (size_t j = 0; j < lo.size(); ++j)
        if (lo[j] > hi[j]) return {};
    return points_in_system(normals, offsets, std::move(lo), std::move(hi));
}

// Lattice points of the parallelepiped { sum t_i g_i } over independent integer
// generators (rows), half-open per coordinate: t_i in [0,1), or (0,1] where
// open_lower[i] is set.
inline IMat parallelepiped_points(const IMat& gens, const std::vector<bool>& open_lower = {}) {
    size_t k = gens.size();
    if (k == 0) return {IVec{}};
    size_t d = gens[0].size();
    if (k != d) throw InternalCheck("parallelepiped generators must be square in their chart");
    IMat Gt = transpose(gens);
    Int D = det(Gt);
    if (D == 0) throw InternalCheck("degenerate parallelepiped");
    IMat B = adjugate(Gt); // B * x = D * t
    if (D < 0) {
        D = -D;
        for (IVec& row : B) row = neg(row);
    }
    IMat normals;
    std::vector<Int> offsets;
    for (size_t i = 0; i < k; ++i) {
        bool open = i < open_lower.size() && open_lower[i];
        normals.push_back(B[i]);
        offsets.push_back(open ? Int(1) : Int(0));
        normals.push_back(neg(B[i]));
        offsets.push_back(open ? Int(-D) : Int(1 - D));
    }
    IVec lo(d, 0), hi(d, 0);
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < k; ++i) {
            if (gens[i][j] < 0)
                lo[j] += gens[i][j];
            else
                hi[j] += gens[i][j];
        }
    }
    IMat pts = points_in_system(normals, offsets, std::move(lo), std::move(hi));
    if (Int(pts.size()) != D) throw InternalCheck("parallelepiped point count differs from the index");
    return pts;
}

// Minimal generating set of C ∩ Z^d as a monoid (Gordan / Hilbert basis),
// for a pointed cone C.
inline IMat hilbert_basis(const Cone& C) {
    size_t k = C.dim();
    if (k == 0) return {};
    std::set<IVec, LexLessI> cand;
    for (const IVec& r : C.chart_rays()) cand.insert(r);
    for (const std::vector<size_t>& simplex : C.triangulation()) {
        IMat gens;
        for (size_t i : simplex) gens.push_back(C.chart_rays()[i]);
        for (IVec& p : parallelepiped_points(gens))
            if (!is_zero(p)) cand.insert(std::move(p));
    }
    auto in_chart_cone = [&](const IVec& x) {
        for (const IVec& f : C.chart_facets())
            if (dot(f, x) < 0) return false;
        return true;
    };
    IMat basis_chart;
    for (const IVec& h : cand) {
        bool reducible = false;
        for (const IVec& c : cand) {
            if (c == h) continue;
            IVec rest = sub(h, c);
            if (!is_zero(rest) && in_chart_cone(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis_chart.push_back(h);
    }
    IMat out;
    for (const IVec& c : basis_chart) {
        IVec x(C.ambient(), 0);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < C.ambient(); ++j) x[j] += c[i] * C.span_basis()[i][j];
        out.push_back(std::move(x));
    }
    std::sort(out.begin(), out.end(), LexLessI{});
    return out;
}

// Convex hull of the lattice points of a rational polytope (possibly lower
// dimensional or empty).
struct LatticeHull {
    bool empty = true;
    size_t dim = 0;
    IMat hull_vertices;             // ambient coordinates
    std::optional<Polytope> full;   // present when full-dimensional
};

inline LatticeHull lattice_hull_of_points(const IMat& pts, size_t ambient) {
    LatticeHull H;
    if (pts.empty()) return H;
    H.empty = false;
    QMat qpts;
    for (const IVec& p : pts) qpts.push_back(to_qvec(p));
    size_t k = affine_rank(qpts);
    H.dim = k;
    if (k == 0) {
        H.hull_vertices.push_back(pts[0]);
        return H;
    }
    if (k == ambient) {
        Polytope P = Polytope::hull(qpts);
        H.full = P;
        H.hull_vertices = P.lattice_vertices();
        return H;
    }
    AffineChart ch = make_chart(qpts);
    QMat coords;
    for (const QVec& p : qpts) coords.push_back(ch.coords(p));
    Polytope P = Polytope::hull(coords);
    for (const QVec& cv : P.vertices()) H.hull_vertices.push_back(to_ivec(ch.lift(cv)));
    std::sort(H.hull_vertices.begin(), H.hull_vertices.end(), LexLessI{});
    return H;
}

inline LatticeHull lattice_hull(const Polytope& P) {
    return lattice_hull_of_points(points_in(P), P.ambient());
}

} // namespace stringy
