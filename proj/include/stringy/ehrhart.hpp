#pragma once

#include "stringy/lattice_points.hpp"
#include "stringy/polynomial.hpp"

namespace stringy {

// Pulling triangulation by vertex indices. Each simplex is a pyramid over a
// simplex of a facet avoiding the pulled vertex, so interiors partition P.
inline std::vector<std::vector<int>> simplices_of(const Polytope& P) {
    const FaceLattice& L = P.face_lattice();
    std::vector<std::vector<std::vector<int>>> memo(L.faces.size());
    std::vector<bool> done(L.faces.size(), false);
    auto rec = [&](auto&& self, size_t fid) -> const std::vector<std::vector<int>>& {
        if (done[fid]) return memo[fid];
        const Face& F = L.faces[fid];
        std::vector<std::vector<int>> out;
        if (F.vertices.size() == size_t(F.dim) + 1) {
            out.push_back(F.vertices);
        } else {
            int v0 = F.vertices[0];
            for (int ch : F.children) {
                const Face& C = L.faces[ch];
                if (std::binary_search(C.vertices.begin(), C.vertices.end(), v0)) continue;
                for (const std::vector<int>& s : self(self, size_t(ch))) {
                    std::vector<int> t = s;
                    t.push_back(v0);
                    std::sort(t.begin(), t.end());
                    out.push_back(std::move(t));
                }
            }
        }
        memo[fid] = std::move(out);
        done[fid] = true;
        return memo[fid];
    };
    return rec(rec, L.top);
}

// Volume normalized so the unit simplex of the lattice Z^d restricted to the
// affine span has volume 1 (euclidean volume times (dim)! in lattice units).
inline Rat normalized_volume(const QMat& points) {
    std::set<QVec, LexLessQ> dedup(points.begin(), points.end());
    if (dedup.empty()) throw InternalCheck("volume of an empty point set");
    QMat pts(dedup.begin(), dedup.end());
    if (pts.size() == 1) return 1;
    AffineChart ch = make_chart(pts);
    size_t k = ch.dim();
    QMat coords;
    coords.reserve(pts.size());
    for (const QVec& p : pts) coords.push_back(ch.coords(p));
    auto simplex_volume = [&](const QMat& vs, const std::vector<int>& ids) {
        QMat M;
        for (size_t i = 1; i < ids.size(); ++i) M.push_back(subq(vs[ids[i]], vs[ids[0]]));
        Rat v = det(std::move(M));
        return v < 0 ? Rat(-v) : v;
    };
    if (pts.size() == k + 1) {
        std::vector<int> all(pts.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);
        return simplex_volume(coords, all);
    }
    Polytope Q = Polytope::hull(std::move(coords));
    Rat total = 0;
    for (const std::vector<int>& s : simplices_of(Q)) total += simplex_volume(Q.vertices(), s);
    return total;
}

inline Rat normalized_volume(const Polytope& P) { return normalized_volume(P.vertices()); }

inline Rat face_volume(const Polytope& P, size_t face_id) {
    return normalized_volume(face_points(P, face_id));
}

// Lattice point counter for integer dilates of one lattice polytope, caching
// the chart inequality description.
class DilationCounter {
public:
    explicit DilationCounter(const QMat& face_pts) {
        for (const QVec& p : face_pts)
            if (!is_integral(p)) throw NonLatticeVertices("dilation counts need lattice vertices");
        std::set<QVec, LexLessQ> dedup(face_pts.begin(), face_pts.end());
        QMat pts(dedup.begin(), dedup.end());
        if (pts.empty()) throw InternalCheck("dilation counter over an empty point set");
        AffineChart ch = make_chart(pts);
        k_ = ch.dim();
        if (k_ == 0) return;
        QMat coords;
        for (const QVec& p : pts) coords.push_back(ch.coords(p));
        Polytope Q = Polytope::hull(std::move(coords));
        for (const Facet& f : Q.facets()) {
            if (!is_integer(f.offset)) throw InternalCheck("lattice polytope with fractional support value");
            normals_.push_back(f.normal);
            offsets_.push_back(f.offset.get_num());
        }
        lo_.assign(k_, 0);
        hi_.assign(k_, 0);
        for (size_t j = 0; j < k_; ++j) {
            Rat mn = Q.vertices()[0][j], mx = mn;
            for (const QVec& v : Q.vertices()) {
                if (v[j] < mn) mn = v[j];
                if (v[j] > mx) mx = v[j];
            }
            lo_[j] = ceil_rat(mn);
            hi_[j] = floor_rat(mx);
        }
    }

    size_t dim() const { return k_; }

    Int count(const Int& l) const {
        if (l < 0) throw InternalCheck("negative dilation");
        if (k_ == 0) return 1;
        std::vector<Int> offs;
        offs.reserve(offsets_.size());
        for (const Int& o : offsets_) offs.push_back(o * l);
        IVec lo(k_), hi(k_);
        for (size_t j = 0; j < k_; ++j) {
            lo[j] = lo_[j] * l;
            hi[j] = hi_[j] * l;
        }
        return count_in_system(normals_, offs, std::move(lo), std::move(hi));
    }

private:
    size_t k_ = 0;
    IMat normals_;
    std::vector<Int> offsets_;
    IVec lo_, hi_;
};

struct HStarVector {
    size_t dim = 0;
    std::vector<Int> psi; // psi[0..dim]
};

// h*-vector through the first dim+1 dilation counts; the defining alternating
// sums must come out nonnegative with psi_0 = 1 and total the volume.
inline HStarVector hstar(const QMat& face_pts) {
    DilationCounter dc(face_pts);
    size_t k = dc.dim();
    std::vector<Int> counts(k + 1);
    for (size_t l = 0; l <= k; ++l) counts[l] = dc.count(Int(l));
    HStarVector h;
    h.dim = k;
    h.psi.assign(k + 1, Int(0));
    for (size_t j = 0; j <= k; ++j) {
        Int acc = 0;
        for (size_t i = 0; i <= j; ++i) {
            Int term = binomial(k + 1, i) * counts[j - i];
            acc += (i % 2) ? -term : term;
        }
        h.psi[j] = acc;
    }
    if (h.psi[0] != 1) throw InternalCheck("h* vector must start at 1");
    Int total = 0;
    for (const Int& p : h.psi) {
        if (p < 0) throw InternalCheck("negative h* entry");
        total += p;
    }
    if (Rat(total) != normalized_volume(face_pts))
        throw InternalCheck("h* entries do not sum to the volume");
    return h;
}

inline UPoly e_theta_from(const HStarVector& h) {
    size_t k = h.dim;
    if (k == 0) throw ZeroDimensionalFace("the E polynomial needs a face of dimension at least 1");
    UPoly um1{Rat(-1), Rat(1)}; // u - 1
    UPoly numer = um1.pow(k) - UPoly(Rat(k % 2 ? -1 : 1));
    UPoly head = numer.divexact(UPoly{Rat(0), Rat(1)});
    UPoly tail;
    for (size_t i = 1; i <= k; ++i) tail = tail + UPoly::monomial(Rat(h.psi[i]), i - 1);
    return (k % 2) ? head + tail : head - tail;
}

// E(Theta, u) of a lattice face: evaluates to (-1)^(dim-1) * volume at u = 1.
inline UPoly e_theta(const QMat& face_pts) { return e_theta_from(hstar(face_pts)); }

} // namespace stringy
