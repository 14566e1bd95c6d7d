#pragma once

#include <stringy/fine_interior.hpp>
#include <stringy/lattice_points.hpp>
#include <stringy/polyhedra.hpp>

#include <algorithm>
#include <random>

namespace testutil {

using namespace stringy;

inline IVec unit(size_t d, size_t i, long s = 1) {
    IVec e(d, 0);
    e[i] = s;
    return e;
}

// conv{ +-e_i }
inline Polytope cross(size_t d) {
    IMat pts;
    for (size_t i = 0; i < d; ++i) {
        pts.push_back(unit(d, i, 1));
        pts.push_back(unit(d, i, -1));
    }
    return Polytope::hull(pts);
}

// [-1,1]^d
inline Polytope cube(size_t d) {
    IMat pts;
    for (size_t m = 0; m < (size_t(1) << d); ++m) {
        IVec v(d);
        for (size_t j = 0; j < d; ++j) v[j] = (m >> j & 1) ? 1 : -1;
        pts.push_back(std::move(v));
    }
    return Polytope::hull(pts);
}

// conv{e_1, ..., e_d, -(1,...,1)}
inline Polytope fan_simplex(size_t d) {
    IMat pts;
    for (size_t i = 0; i < d; ++i) pts.push_back(unit(d, i));
    pts.push_back(IVec(d, -1));
    return Polytope::hull(pts);
}

// conv{(d+1)e_i - (1,...,1), -(1,...,1)}, the recentred degree-(d+1) simplex
inline Polytope newton_simplex(size_t d) {
    IMat pts;
    for (size_t i = 0; i < d; ++i) {
        IVec v(d, -1);
        v[i] = long(d);
        pts.push_back(std::move(v));
    }
    pts.push_back(IVec(d, -1));
    return Polytope::hull(pts);
}

// conv{lo * e_i, hi * e_i}, the coordinate slab family in dimension d
inline Polytope sum_slab(size_t d, long lo, long hi) {
    IMat pts;
    for (size_t i = 0; i < d; ++i) {
        pts.push_back(unit(d, i, lo));
        pts.push_back(unit(d, i, hi));
    }
    return Polytope::hull(pts);
}

inline Polytope corti_simplex() {
    return Polytope::hull(IMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-5, -6, -8}});
}

inline Polytope closure_example() {
    return Polytope::hull(IMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}});
}

inline IMat sorted(IMat m) {
    std::sort(m.begin(), m.end(), LexLessI{});
    return m;
}

inline QMat sortedq(QMat m) {
    std::sort(m.begin(), m.end(), LexLessQ{});
    return m;
}

inline QMat qmat(const IMat& m) {
    QMat q;
    q.reserve(m.size());
    for (const IVec& r : m) q.push_back(to_qvec(r));
    return q;
}

inline bool same_point_set(const IMat& a, const IMat& b) { return sorted(a) == sorted(b); }

// Random full-dimensional lattice polytope from point samples in [-box, box]^d.
inline Polytope random_polytope(std::mt19937_64& rng, size_t d, long box, size_t max_pts) {
    std::uniform_int_distribution<long> coord(-box, box);
    std::uniform_int_distribution<size_t> npts(d + 1, max_pts);
    for (;;) {
        IMat pts;
        size_t m = npts(rng);
        for (size_t i = 0; i < m; ++i) {
            IVec p(d);
            for (size_t j = 0; j < d; ++j) p[j] = coord(rng);
            pts.push_back(std::move(p));
        }
        try {
            return Polytope::hull(pts);
        } catch (const NotFullDimensional&) {
        }
    }
}

} // namespace testutil
