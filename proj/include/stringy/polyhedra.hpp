#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "stringy/linalg.hpp"

namespace stringy {

enum class SideTag { M, N };

inline SideTag flipped(SideTag s) { return s == SideTag::M ? SideTag::N : SideTag::M; }

namespace detail {

struct DDRay {
    IVec v;
    std::vector<uint64_t> zero; // bit i set iff tight on the i-th processed inequality
};

inline void set_zero_bit(std::vector<uint64_t>& z, size_t idx) {
    size_t w = idx / 64;
    if (z.size() <= w) z.resize(w + 1, 0);
    z[w] |= uint64_t(1) << (idx % 64);
}

inline std::vector<uint64_t> bit_and(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::vector<uint64_t> r(std::min(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

inline bool bit_subset(const std::vector<uint64_t>& sub, const std::vector<uint64_t>& sup) {
    for (size_t i = 0; i < sub.size(); ++i) {
        uint64_t t = i < sup.size() ? sup[i] : 0;
        if ((sub[i] & ~t) != 0) return false;
    }
    return true;
}

} // namespace detail

// Extreme rays (primitive, lex sorted) of { x : <a, x> >= 0 for every row a }.
// The result cone must be pointed, i.e. rank(inequalities) == k.
inline IMat dd_extreme_rays(const IMat& inequalities, size_t k) {
    using detail::DDRay;

    std::set<IVec, LexLessI> dedup;
    IMat A;
    for (const IVec& row : inequalities) {
        IVec p = primitive(row);
        if (is_zero(p)) continue;
        if (dedup.insert(p).second) A.push_back(p);
    }

    // Greedy selection of k independent inequalities for the initial simplicial cone.
    std::vector<size_t> basis_idx;
    {
        QMat acc;
        for (size_t i = 0; i < A.size() && basis_idx.size() < k; ++i) {
            acc.push_back(to_qvec(A[i]));
            if (rank(acc) == basis_idx.size() + 1) {
                basis_idx.push_back(i);
            } else {
                acc.pop_back();
            }
        }
    }
    if (basis_idx.size() < k) throw InternalCheck("double description requires a pointed cone");

    IMat order; // basis rows first, then the rest
    {
        std::set<size_t> used(basis_idx.begin(), basis_idx.end());
        for (size_t i : basis_idx) order.push_back(A[i]);
        for (size_t i = 0; i < A.size(); ++i)
            if (!used.count(i)) order.push_back(A[i]);
    }

    IMat M(order.begin(), order.begin() + k);
    Int dt = det(M);
    IMat adj = adjugate(M);
    int s = sgn(dt);

    std::vector<DDRay> rays;
    for (size_t j = 0; j < k; ++j) {
        IVec v(k);
        for (size_t i = 0; i < k; ++i) v[i] = s * adj[i][j];
        DDRay r{primitive(v), {}};
        for (size_t i = 0; i < k; ++i)
            if (i != j) detail::set_zero_bit(r.zero, i);
        rays.push_back(std::move(r));
    }

    for (size_t t = k; t < order.size(); ++t) {
        const IVec& a = order[t];
        std::vector<Int> val(rays.size());
        bool any_neg = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            val[i] = dot(a, rays[i].v);
            if (val[i] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (size_t i = 0; i < rays.size(); ++i)
                if (val[i] == 0) detail::set_zero_bit(rays[i].zero, t);
            continue;
        }
        std::vector<DDRay> next;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (val[i] >= 0) {
                DDRay r = rays[i];
                if (val[i] == 0) detail::set_zero_bit(r.zero, t);
                next.push_back(std::move(r));
            }
        }
        for (size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (size_t n = 0; n < rays.size(); ++n) {
                if (val[n] >= 0) continue;
                std::vector<uint64_t> common = detail::bit_and(rays[p].zero, rays[n].zero);
                bool adjacent = true;
                for (size_t w = 0; w < rays.size(); ++w) {
                    if (w == p || w == n) continue;
                    if (detail::bit_subset(common, rays[w].zero)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                IVec nv(k);
                for (size_t j = 0; j < k; ++j) nv[j] = val[p] * rays[n].v[j] - val[n] * rays[p].v[j];
                DDRay r{primitive(nv), {}};
                for (size_t i = 0; i <= t; ++i)
                    if (dot(order[i], r.v) == 0) detail::set_zero_bit(r.zero, i);
                next.push_back(std::move(r));
            }
        }
        rays = std::move(next);
    }

    IMat out;
    out.reserve(rays.size());
    for (DDRay& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), LexLessI{});
    return out;
}

// ---- Pointed rational cones ----

class Cone {
public:
    Cone() : ambient_(0) {}

    static Cone from_rays(IMat rays, size_t ambient) {
        Cone c;
        c.ambient_ = ambient;
        std::set<IVec, LexLessI> dedup;
        for (IVec& r : rays) {
            IVec p = primitive(std::move(r));
            if (is_zero(p)) continue;
            dedup.insert(std::move(p));
        }
        IMat gens(dedup.begin(), dedup.end());
        if (gens.empty()) return c; // the zero cone
        c.span_basis_ = lattice_basis_of_span(gens, ambient);
        size_t k = c.span_basis_.size();
        IMat chart;
        for (const IVec& g : gens) chart.push_back(integer_coordinates_in_basis(c.span_basis_, g));
        c.chart_facets_ = dd_extreme_rays(chart, k);
        if (rank(c.chart_facets_) != k) throw InternalCheck("cone is not pointed");
        // keep only extreme generators
        for (size_t i = 0; i < gens.size(); ++i) {
            QMat tight;
            for (const IVec& f : c.chart_facets_)
                if (dot(f, chart[i]) == 0) tight.push_back(to_qvec(f));
            if (rank(std::move(tight)) == k - 1) {
                c.rays_.push_back(gens[i]);
                c.chart_rays_.push_back(chart[i]);
            }
        }
        c.span_equations_ = integer_kernel(gens, ambient);
        return c;
    }

    size_t ambient() const { return ambient_; }
    size_t dim() const { return span_basis_.size(); }
    const IMat& rays() const { return rays_; }
    const IMat& span_basis() const { return span_basis_; }
    const IMat& chart_rays() const { return chart_rays_; }
    const IMat& chart_facets() const { return chart_facets_; }

    bool contains(const IVec& x) const {
        for (const IVec& e : span_equations_)
            if (dot(e, x) != 0) return false;
        if (dim() == 0) return is_zero(x);
        IVec c = integer_coordinates_in_basis(span_basis_, x);
        for (const IVec& f : chart_facets_)
            if (dot(f, c) < 0) return false;
        return true;
    }

    // Integer vector with positive pairing against every ray.
    IVec positive_grading() const {
        if (rays_.empty()) return IVec(ambient_, 0);
        size_t k = dim();
        IVec mc(k, 0);
        for (const IVec& f : chart_facets_) mc = add(mc, f);
        QMat B = to_qmat(span_basis_);
        std::optional<QVec> m = solve(B, to_qvec(mc));
        if (!m) throw InternalCheck("no grading lift");
        return scale_to_int(*m);
    }

    // Simplicial subcones (as ray index sets) covering the cone, meeting along faces.
    std::vector<std::vector<size_t>> triangulation() const {
        std::vector<std::vector<size_t>> out;
        std::vector<size_t> all(rays_.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = i;
        triangulate_rec(chart_rays_, all, dim(), out);
        return out;
    }

private:
    static void triangulate_rec(const IMat& chart, const std::vector<size_t>& idx, size_t k,
                                std::vector<std::vector<size_t>>& out) {
        if (idx.size() == k) {
            out.push_back(idx);
            return;
        }
        IMat sub;
        for (size_t i : idx) sub.push_back(chart[i]);
        size_t kd = sub.empty() ? 0 : sub[0].size();
        IMat span = lattice_basis_of_span(sub, kd);
        IMat local;
        for (const IVec& g : sub) local.push_back(integer_coordinates_in_basis(span, g));
        IMat facets = dd_extreme_rays(local, k);
        size_t apex = idx[0];
        for (const IVec& f : facets) {
            if (dot(f, local[0]) == 0) continue; // facets through the apex are skipped
            std::vector<size_t> on_facet;
            for (size_t i = 0; i < idx.size(); ++i)
                if (dot(f, local[i]) == 0) on_facet.push_back(idx[i]);
            std::vector<std::vector<size_t>> sub_simplices;
            IMat chart2;
            std::vector<size_t> remap(on_facet.size());
            for (size_t i = 0; i < on_facet.size(); ++i) remap[i] = i;
            for (size_t i : on_facet) chart2.push_back(chart[i]);
            triangulate_rec(chart2, remap, k - 1, sub_simplices);
            for (std::vector<size_t>& s : sub_simplices) {
                std::vector<size_t> simplex{apex};
                for (size_t i : s) simplex.push_back(on_facet[i]);
                std::sort(simplex.begin(), simplex.end());
                out.push_back(std::move(simplex));
            }
        }
    }

    size_t ambient_;
    IMat rays_;
    IMat chart_rays_;
    IMat chart_facets_;
    IMat span_basis_;
    IMat span_equations_;
};

// ---- Polytopes (full-dimensional, exact rational vertices) ----

struct Facet {
    IVec normal; // primitive integer, inward: <normal, x> >= offset on the polytope
    Rat offset;
};

struct Face {
    std::vector<int> vertices;      // sorted vertex indices
    std::vector<int> tight_facets;  // sorted facet indices containing the face
    int dim = 0;
    std::vector<int> children;      // faces of dimension dim-1 contained in this face
};

struct FaceLattice {
    std::vector<Face> faces;   // sorted by (dim, vertex list); last entry is the whole polytope
    std::vector<long> census;  // census[k] = number of proper k-faces
    size_t top = 0;
};

struct HalfspaceCut {
    IVec normal;
    Rat offset; // <normal, x> >= offset
};

// Raw vertex enumeration result for a halfspace intersection.
struct Region {
    bool empty = true;
    bool bounded = true;
    QMat vertices;
};

inline Region enumerate_vertices(const std::vector<HalfspaceCut>& cuts, size_t d) {
    {
        IMat normals;
        normals.reserve(cuts.size());
        for (const HalfspaceCut& c : cuts) normals.push_back(c.normal);
        if (rank(normals) < d) {
            // The directions orthogonal to every normal are unconstrained, so
            // a nonempty region is automatically unbounded. Emptiness is then
            // decided inside the span of the normals, where homogenization
            // yields a pointed cone again.
            IMat basis = lattice_basis_of_span(normals, d);
            size_t r = basis.size();
            std::vector<HalfspaceCut> reduced;
            reduced.reserve(cuts.size());
            for (const HalfspaceCut& c : cuts) {
                IVec m(r);
                for (size_t j = 0; j < r; ++j) m[j] = dot(basis[j], c.normal);
                reduced.push_back({std::move(m), c.offset});
            }
            Region reg;
            reg.bounded = false;
            reg.empty = enumerate_vertices(reduced, r).empty;
            return reg;
        }
    }
    IMat rows;
    for (const HalfspaceCut& c : cuts) {
        Int den = c.offset.get_den();
        IVec row(d + 1);
        row[0] = -c.offset.get_num();
        for (size_t j = 0; j < d; ++j) row[j + 1] = den * c.normal[j];
        rows.push_back(std::move(row));
    }
    {
        IVec t0(d + 1, 0);
        t0[0] = 1;
        rows.push_back(std::move(t0));
    }
    IMat rays = dd_extreme_rays(rows, d + 1);
    Region reg;
    for (const IVec& r : rays) {
        if (r[0] == 0) {
            reg.bounded = false;
            continue;
        }
        QVec v(d);
        for (size_t j = 0; j < d; ++j) {
            v[j] = Rat(r[j + 1], r[0]);
            v[j].canonicalize();
        }
        reg.vertices.push_back(std::move(v));
        reg.empty = false;
    }
    std::sort(reg.vertices.begin(), reg.vertices.end(), LexLessQ{});
    return reg;
}

class Polytope {
public:
    Polytope() = default;

    static Polytope hull(QMat points, SideTag side = SideTag::M) {
        if (points.empty()) throw NotFullDimensional("no points");
        size_t d = points[0].size();
        std::set<QVec, LexLessQ> dedup(points.begin(), points.end());
        QMat pts(dedup.begin(), dedup.end());
        if (affine_rank(pts) != d)
            throw NotFullDimensional("points span a " + std::to_string(affine_rank(pts)) +
                                     "-dimensional affine subspace of R^" + std::to_string(d));
        IMat rows;
        for (const QVec& p : pts) {
            Int den = common_denominator(p);
            IVec row(d + 1);
            row[0] = den;
            for (size_t j = 0; j < d; ++j) {
                Rat v = p[j] * den;
                row[j + 1] = v.get_num();
            }
            rows.push_back(std::move(row));
        }
        IMat facet_rays = dd_extreme_rays(rows, d + 1);
        Polytope P;
        P.ambient_ = d;
        P.side_ = side;
        for (const IVec& r : facet_rays) {
            IVec n(r.begin() + 1, r.end());
            Int g = 0;
            for (const Int& x : n) g = gcd(g, x);
            Facet f;
            f.normal = primitive(n);
            f.offset = Rat(-r[0], g);
            f.offset.canonicalize();
            P.facets_.push_back(std::move(f));
        }
        std::sort(P.facets_.begin(), P.facets_.end(), [](const Facet& a, const Facet& b) {
            return LexLessI{}(a.normal, b.normal);
        });
        for (const QVec& p : pts) {
            QMat tight;
            for (const Facet& f : P.facets_)
                if (dotq(f.normal, p) == f.offset) tight.push_back(to_qvec(f.normal));
            if (rank(std::move(tight)) == d) P.vertices_.push_back(p);
        }
        return P;
    }

    static Polytope hull(const IMat& points, SideTag side = SideTag::M) {
        QMat q;
        q.reserve(points.size());
        for (const IVec& p : points) q.push_back(to_qvec(p));
        return hull(std::move(q), side);
    }

    static Polytope from_inequalities(const std::vector<HalfspaceCut>& cuts, size_t d,
                                      SideTag side = SideTag::M) {
        Region reg = enumerate_vertices(cuts, d);
        if (reg.empty) throw EmptyRegion("halfspace intersection is empty");
        if (!reg.bounded) throw UnboundedRegion("halfspace intersection is unbounded");
        return hull(std::move(reg.vertices), side);
    }

    size_t ambient() const { return ambient_; }
    size_t dim() const { return ambient_; }
    SideTag side() const { return side_; }
    void set_side(SideTag s) { side_ = s; }
    const QMat& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool is_lattice() const {
        for (const QVec& v : vertices_)
            if (!is_integral(v)) return false;
        return true;
    }

    IMat lattice_vertices() const {
        IMat m;
        m.reserve(vertices_.size());
        for (const QVec& v : vertices_) m.push_back(to_ivec(v));
        return m;
    }

    Rat ord(const IVec& n) const {
        Rat best;
        bool first = true;
        for (const QVec& v : vertices_) {
            Rat s = dotq(n, v);
            if (first || s < best) {
                best = s;
                first = false;
            }
        }
        return best;
    }

    bool contains(const QVec& x) const {
        for (const Facet& f : facets_)
            if (dotq(f.normal, x) < f.offset) return false;
        return true;
    }

    bool strictly_contains(const QVec& x) const {
        for (const Facet& f : facets_)
            if (dotq(f.normal, x) <= f.offset) return false;
        return true;
    }

    bool origin_interior() const {
        for (const Facet& f : facets_)
            if (f.offset >= 0) return false;
        return true;
    }

    // { y : <x, y> >= -1 for all x in P }; needs the origin strictly inside.
    Polytope polar() const {
        if (!origin_interior()) throw OriginNotInterior("polar requires the origin strictly inside");
        Polytope Q;
        Q.ambient_ = ambient_;
        Q.side_ = flipped(side_);
        for (const Facet& f : facets_) {
            QVec v(ambient_);
            for (size_t j = 0; j < ambient_; ++j) v[j] = Rat(f.normal[j]) / (-f.offset);
            Q.vertices_.push_back(std::move(v));
        }
        std::sort(Q.vertices_.begin(), Q.vertices_.end(), LexLessQ{});
        for (const QVec& v : vertices_) {
            IVec n = scale_to_int(v);
            Int g = 0;
            for (const Int& x : n) g = gcd(g, x);
            // v = lambda * primitive(n) with lambda > 0; <v,y> >= -1 becomes <n',y> >= -1/lambda
            Rat lambda = 0;
            IVec np = primitive(n);
            for (size_t j = 0; j < ambient_; ++j) {
                if (np[j] != 0) {
                    lambda = v[j] / np[j];
                    break;
                }
            }
            Facet f;
            f.normal = std::move(np);
            f.offset = Rat(-1) / lambda;
            Q.facets_.push_back(std::move(f));
        }
        std::sort(Q.facets_.begin(), Q.facets_.end(), [](const Facet& a, const Facet& b) {
            return LexLessI{}(a.normal, b.normal);
        });
        return Q;
    }

    Polytope translated(const IVec& t) const { // P - t
        Polytope Q;
        Q.ambient_ = ambient_;
        Q.side_ = side_;
        Q.vertices_ = vertices_;
        for (QVec& v : Q.vertices_)
            for (size_t j = 0; j < ambient_; ++j) v[j] -= t[j];
        Q.facets_ = facets_;
        for (Facet& f : Q.facets_) f.offset -= Rat(dot(f.normal, t));
        Q.lattice_.reset();
        return Q;
    }

    const FaceLattice& face_lattice() const {
        if (!lattice_) lattice_ = std::make_shared<FaceLattice>(build_face_lattice());
        return *lattice_;
    }

    const Face& face(size_t id) const { return face_lattice().faces[id]; }

    size_t top_face() const { return face_lattice().top; }

    // Vertex index sets per facet, aligned with facets().
    std::vector<std::vector<int>> facet_incidence() const {
        std::vector<std::vector<int>> inc(facets_.size());
        for (size_t f = 0; f < facets_.size(); ++f)
            for (size_t j = 0; j < vertices_.size(); ++j)
                if (dotq(facets_[f].normal, vertices_[j]) == facets_[f].offset)
                    inc[f].push_back(int(j));
        return inc;
    }

    Cone normal_cone(size_t face_id) const {
        const Face& F = face(face_id);
        IMat gens;
        for (int f : F.tight_facets) gens.push_back(facets_[f].normal);
        return Cone::from_rays(std::move(gens), ambient_);
    }

    // Vertices of the dual face { y in polar : <x, y> = -1 on the face }.
    QMat dual_face_vertices(size_t face_id) const {
        if (!origin_interior()) throw OriginNotInterior("dual faces require the origin strictly inside");
        const Face& F = face(face_id);
        QMat out;
        for (int f : F.tight_facets) {
            QVec v(ambient_);
            for (size_t j = 0; j < ambient_; ++j) v[j] = Rat(facets_[f].normal[j]) / (-facets_[f].offset);
            out.push_back(std::move(v));
        }
        std::sort(out.begin(), out.end(), LexLessQ{});
        return out;
    }

    bool operator==(const Polytope& o) const {
        return ambient_ == o.ambient_ && vertices_ == o.vertices_;
    }

private:
    FaceLattice build_face_lattice() const {
        FaceLattice L;
        std::vector<std::vector<int>> inc = facet_incidence();
        std::map<std::vector<int>, int> dims;
        std::vector<std::vector<int>> work(inc.begin(), inc.end());
        std::set<std::vector<int>> seen(inc.begin(), inc.end());
        while (!work.empty()) {
            std::vector<int> cur = std::move(work.back());
            work.pop_back();
            for (const std::vector<int>& fv : inc) {
                std::vector<int> meet;
                std::set_intersection(cur.begin(), cur.end(), fv.begin(), fv.end(),
                                      std::back_inserter(meet));
                if (meet.empty() || meet == cur) continue;
                if (seen.insert(meet).second) work.push_back(std::move(meet));
            }
        }
        for (const std::vector<int>& vs : seen) {
            QMat pts;
            for (int j : vs) pts.push_back(vertices_[j]);
            Face F;
            F.vertices = vs;
            F.dim = int(affine_rank(pts));
            for (size_t f = 0; f < inc.size(); ++f)
                if (std::includes(inc[f].begin(), inc[f].end(), vs.begin(), vs.end()))
                    F.tight_facets.push_back(int(f));
            L.faces.push_back(std::move(F));
        }
        {
            Face top;
            for (size_t j = 0; j < vertices_.size(); ++j) top.vertices.push_back(int(j));
            top.dim = int(ambient_);
            L.faces.push_back(std::move(top));
        }
        std::sort(L.faces.begin(), L.faces.end(), [](const Face& a, const Face& b) {
            if (a.dim != b.dim) return a.dim < b.dim;
            return a.vertices < b.vertices;
        });
        L.top = L.faces.size() - 1;
        L.census.assign(ambient_, 0);
        for (const Face& F : L.faces)
            if (size_t(F.dim) < ambient_) ++L.census[F.dim];
        Int euler = 0;
        for (size_t k = 0; k < ambient_; ++k) euler += (k % 2 ? -1 : 1) * Int(L.census[k]);
        Int expected = (ambient_ % 2 == 0) ? 0 : 2;
        if (euler != expected) throw InternalCheck("face lattice fails the Euler relation");
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < L.faces.size(); ++i) index[L.faces[i].vertices] = int(i);
        for (size_t i = 0; i < L.faces.size(); ++i) {
            for (size_t j = 0; j < L.faces.size(); ++j) {
                if (L.faces[j].dim != L.faces[i].dim - 1) continue;
                if (std::includes(L.faces[i].vertices.begin(), L.faces[i].vertices.end(),
                                  L.faces[j].vertices.begin(), L.faces[j].vertices.end()))
                    L.faces[i].children.push_back(int(j));
            }
        }
        return L;
    }

    size_t ambient_ = 0;
    SideTag side_ = SideTag::M;
    QMat vertices_;
    std::vector<Facet> facets_;
    mutable std::shared_ptr<FaceLattice> lattice_;
};

// Chart of a face (or any rational point set): anchor plus a saturated lattice
// basis of the linear span of the differences.
struct AffineChart {
    QVec anchor;
    IMat basis; // rows

    size_t dim() const { return basis.size(); }

    QVec coords(const QVec& x) const {
        if (basis.empty()) {
            if (x != anchor) throw InternalCheck("point outside zero-dimensional chart");
            return {};
        }
        return coordinates_in_basis(basis, subq(x, anchor));
    }

    QVec lift(const QVec& c) const {
        QVec x = anchor;
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = 0; j < x.size(); ++j) x[j] += c[i] * basis[i][j];
        return x;
    }
};

inline AffineChart make_chart(const QMat& points) {
    if (points.empty()) throw InternalCheck("chart of an empty point set");
    AffineChart ch;
    ch.anchor = points[0];
    IMat dirs;
    for (size_t i = 1; i < points.size(); ++i) dirs.push_back(scale_to_int(subq(points[i], points[0])));
    size_t d = points[0].size();
    if (dirs.empty())
        ch.basis = {};
    else
        ch.basis = lattice_basis_of_span(dirs, d);
    return ch;
}

inline QMat face_points(const Polytope& P, size_t face_id) {
    QMat pts;
    for (int j : P.face(face_id).vertices) pts.push_back(P.vertices()[j]);
    return pts;
}

} // namespace stringy
