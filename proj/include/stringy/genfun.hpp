#pragma once

#include "stringy/lattice_points.hpp"
#include "stringy/polynomial.hpp"

namespace stringy {

namespace detail {

// Ray index sets of all faces of a pointed cone, from the zero face (empty
// set) up to the cone itself.
inline std::vector<std::vector<size_t>> cone_face_ray_sets(const Cone& C) {
    size_t n = C.chart_rays().size();
    std::vector<size_t> full(n);
    for (size_t i = 0; i < n; ++i) full[i] = i;
    std::set<std::vector<size_t>> seen;
    seen.insert(full);
    std::vector<std::vector<size_t>> inc;
    for (const IVec& f : C.chart_facets()) {
        std::vector<size_t> tight;
        for (size_t i = 0; i < n; ++i)
            if (dot(f, C.chart_rays()[i]) == 0) tight.push_back(i);
        inc.push_back(tight);
        seen.insert(tight);
    }
    std::vector<std::vector<size_t>> work(seen.begin(), seen.end());
    while (!work.empty()) {
        std::vector<size_t> cur = std::move(work.back());
        work.pop_back();
        for (const std::vector<size_t>& fv : inc) {
            std::vector<size_t> meet;
            std::set_intersection(cur.begin(), cur.end(), fv.begin(), fv.end(),
                                  std::back_inserter(meet));
            if (meet == cur) continue;
            if (seen.insert(meet).second) work.push_back(std::move(meet));
        }
    }
    return {seen.begin(), seen.end()};
}

inline size_t exponent_index(const Int& e) {
    if (e <= 0 || !e.fits_ulong_p()) throw InternalCheck("grading exponent out of range");
    return size_t(e.get_ui());
}

inline RationalFunctionUQ r_cone_closed(const Cone& C, const IVec& m) {
    if (C.dim() == 0) return RationalFunctionUQ(Rat(1));
    size_t k = C.dim();
    IVec mc(k);
    for (size_t i = 0; i < k; ++i) mc[i] = dot(m, C.span_basis()[i]);
    std::vector<Int> exps;
    for (const IVec& r : C.chart_rays()) exps.push_back(dot(mc, r));

    std::vector<std::vector<size_t>> tri = C.triangulation();
    // facet normals of every simplicial piece, aligned with its ray list
    std::vector<IMat> walls(tri.size());
    for (size_t t = 0; t < tri.size(); ++t) {
        IMat M;
        for (size_t i : tri[t]) M.push_back(C.chart_rays()[i]);
        Int D = det(M);
        if (D == 0) throw InternalCheck("degenerate simplex in a cone triangulation");
        IMat A = adjugate(M);
        for (size_t i = 0; i < k; ++i) {
            IVec ni(k);
            for (size_t j = 0; j < k; ++j) ni[j] = D < 0 ? Int(-A[j][i]) : A[j][i];
            walls[t].push_back(std::move(ni));
        }
    }

    // observer interior to the first piece, off every wall hyperplane
    IVec w;
    for (Int lam = 1; lam < 1000; ++lam) {
        IVec cand(k, 0);
        Int coef = 1;
        for (size_t i : tri[0]) {
            cand = add(cand, scale(coef, C.chart_rays()[i]));
            coef *= lam;
        }
        bool ok = true;
        for (const IMat& ws : walls)
            for (const IVec& n : ws)
                if (dot(n, cand) == 0) ok = false;
        if (ok) {
            w = std::move(cand);
            break;
        }
    }
    if (w.empty()) throw InternalCheck("no generic observer found");

    RationalFunctionUQ total;
    for (size_t t = 0; t < tri.size(); ++t) {
        IMat gens;
        std::vector<bool> open_lower;
        UPoly den{Rat(1)};
        for (size_t a = 0; a < tri[t].size(); ++a) {
            size_t i = tri[t][a];
            gens.push_back(C.chart_rays()[i]);
            open_lower.push_back(dot(walls[t][a], w) < 0);
            den = den * UPoly::one_minus_power(exponent_index(exps[i]));
        }
        std::vector<Rat> coeff;
        for (const IVec& p : parallelepiped_points(gens, open_lower)) {
            Int e = dot(mc, p);
            if (e < 0) throw InternalCheck("negative grading inside the cone");
            size_t idx = size_t(e.get_ui());
            if (coeff.size() <= idx) coeff.resize(idx + 1, Rat(0));
            coeff[idx] += 1;
        }
        UPoly num;
        for (size_t i = coeff.size(); i-- > 0;)
            if (coeff[i] != 0) num = num + UPoly::monomial(coeff[i], i);
        total = total + RationalFunctionUQ(std::move(num), std::move(den));
    }
    return total;
}

} // namespace detail

// Generating function of the grading <m, x> over the lattice points of C
// (closed) or of its relative interior, as a rational function of u.
// The grading must be positive on every ray.
inline RationalFunctionUQ R_cone(const Cone& C, const IVec& m, bool closed = true) {
    for (const IVec& r : C.rays())
        if (dot(m, r) <= 0)
            throw NonPositiveGrading("grading must be positive on every generator");
    if (C.dim() == 0) return RationalFunctionUQ(Rat(1));
    if (closed) return detail::r_cone_closed(C, m);
    // relative interior: alternating sum of closed faces
    RationalFunctionUQ total;
    size_t k = C.dim();
    for (const std::vector<size_t>& S : detail::cone_face_ray_sets(C)) {
        IMat gens;
        for (size_t i : S) gens.push_back(C.rays()[i]);
        Cone F = Cone::from_rays(std::move(gens), C.ambient());
        RationalFunctionUQ term = detail::r_cone_closed(F, m);
        if ((k - F.dim()) % 2) term = -term;
        total = total + term;
    }
    return total;
}

// R(C, m, t) = (-1)^dim R(int C, m, 1/t) as rational functions.
inline bool reciprocity_check(const Cone& C, const IVec& m) {
    RationalFunctionUQ closed = R_cone(C, m, true);
    RationalFunctionUQ open = R_cone(C, m, false).substitute_reciprocal();
    if (C.dim() % 2) open = -open;
    return closed == open;
}

// lim (1-t)^dim R(C, m, t) at t = 1: the normalized volume of the slice
// { y in C : <m, y> <= 1 }.
inline Rat vanishing_limit(const Cone& C, const IVec& m) {
    RationalFunctionUQ R = R_cone(C, m, true);
    RationalFunctionUQ f = R * RationalFunctionUQ(UPoly::one_minus_power(1).pow(C.dim()));
    return f.evaluate(1);
}

} // namespace stringy
