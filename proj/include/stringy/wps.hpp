#pragma once

#include <cstdlib>

#include "stringy/stringy.hpp"

namespace stringy {

// Weighted projective space family P(1,...,1,a) in dimension d = a*b + l,
// with b controlling the slab height and 1 <= l <= a-1.
struct WPSParams {
    long a = 2;
    long b = 2;
    long l = 1;

    long dim() const { return a * b + l; }

    void validate() const {
        if (a < 2 || b < 2 || l < 1 || l > a - 1)
            throw InvalidParams("weights need a >= 2, b >= 2 and 1 <= l <= a-1");
    }
};

constexpr size_t kDefaultMaxDim = 8;

inline size_t guarded_dim(const WPSParams& p, size_t max_dim) {
    p.validate();
    long d = p.dim();
    if (size_t(d) > max_dim)
        throw DimensionGuard("dimension " + std::to_string(d) + " exceeds the materialization bound " +
                             std::to_string(max_dim));
    return size_t(d);
}

// Newton polytope of the family member: the simplex slab
// { y_i >= -1, <(-1,...,-1,-a), y> >= -1, y_d <= b }.
inline Polytope wps_delta(const WPSParams& p, size_t max_dim = kDefaultMaxDim) {
    size_t d = guarded_dim(p, max_dim);
    std::vector<HalfspaceCut> cuts;
    for (size_t i = 0; i < d; ++i) {
        IVec e(d, 0);
        e[i] = 1;
        cuts.push_back({std::move(e), Rat(-1)});
    }
    IVec w(d, -1);
    w[d - 1] = -p.a;
    cuts.push_back({std::move(w), Rat(-1)});
    IVec md(d, 0);
    md[d - 1] = -1;
    cuts.push_back({std::move(md), Rat(-p.b)});
    Polytope P = Polytope::from_inequalities(cuts, d, SideTag::M);
    if (!P.is_lattice()) throw InternalCheck("the slab must be a lattice polytope");
    return P;
}

// Its dual: the simplex on e_1..e_d and (-1,...,-1,-a).
inline Polytope wps_dual(const WPSParams& p, size_t max_dim = kDefaultMaxDim) {
    size_t d = guarded_dim(p, max_dim);
    IMat vs;
    for (size_t i = 0; i < d; ++i) {
        IVec e(d, 0);
        e[i] = 1;
        vs.push_back(std::move(e));
    }
    IVec w(d, -1);
    w[d - 1] = -p.a;
    vs.push_back(std::move(w));
    return Polytope::hull(vs, SideTag::N);
}

// Closed form of the stringy Euler number of the hypersurface, any dimension.
inline Rat wps_estr_closed(const WPSParams& p) {
    p.validate();
    unsigned long d = (unsigned long)(p.dim());
    Int ad(p.a + long(d));
    Int L(p.l);
    Rat t(ipow(ad, d) - ipow(L, d), p.a);
    t.canonicalize();
    if (d % 2 == 0) t = -t;
    for (unsigned long k = 1; k < d; ++k) {
        Rat term = Rat(binomial(d, k - 1) * ipow(L, d - k), p.b);
        term.canonicalize();
        term += Rat(binomial(d, k - 1) * ipow(ad, d - k));
        Rat third(binomial(d, k) * (ipow(ad, d - k) - ipow(L, d - k)), p.a);
        third.canonicalize();
        term += third;
        if ((d - 1 - k) % 2) term = -term;
        t += term;
    }
    return t;
}

// Closed form on the mirror side; depends only on a and the dimension.
inline Rat wps_estr_closed_dual(const WPSParams& p) {
    p.validate();
    unsigned long d = (unsigned long)(p.dim());
    Int ad(p.a + long(d));
    Rat t = Rat(p.a) - Rat(1, p.a);
    if (d % 2 == 0) t = -t;
    for (unsigned long i = 1; i + 1 < d; ++i) {
        Rat term(binomial(d, i) * ipow(ad, d - i - 1));
        t -= (i % 2) ? -term : term;
    }
    for (unsigned long i = 2; i < d; ++i) {
        Rat term(binomial(d, i) * ipow(ad, d - i), p.a);
        term.canonicalize();
        t += (i % 2) ? -term : term;
    }
    return t;
}

// Aggregate of the two closed forms valid at l = 1, where the mirror pairing
// collapses them into one expression.
inline Rat wps_estr_l1(const WPSParams& p) {
    p.validate();
    if (p.l != 1) throw InvalidParams("the aggregate form applies only at l = 1");
    unsigned long d = (unsigned long)(p.dim());
    Int ad(p.a + long(d));
    Rat t = Rat(p.a) - Rat(1, p.a);
    Rat s1 = 0;
    for (unsigned long i = 0; i + 1 < d; ++i) {
        Rat term(binomial(d, i) * ipow(ad, d - 1 - i));
        s1 += (i % 2) ? -term : term;
    }
    t += (d % 2) ? -s1 : s1; // sign (-1)^(d-2)
    Rat s2 = 0;
    for (unsigned long i = 0; i < d; ++i) {
        Rat term(binomial(d, i) * ipow(ad, d - i), p.a);
        term.canonicalize();
        s2 += (i % 2) ? -term : term;
    }
    t += (d % 2) ? s2 : -s2; // sign (-1)^(d-1)
    return t;
}

// Residual term separating the two closed forms away from l = 1.
inline Rat wps_aggregate(const WPSParams& p) {
    p.validate();
    unsigned long d = (unsigned long)(p.dim());
    Int br = ipow(Int(p.l - 1), d);
    br -= (d % 2) ? -1 : 1;
    Int corr = Int(long(d)) * p.l;
    br -= (d % 2) ? corr : -corr;
    Rat A(br, Int(p.l) * p.b);
    A.canonicalize();
    if (d % 2) A = -A; // sign (-1)^(d-2)
    return A;
}

struct WPSReport {
    WPSParams params;
    long dim = 0;
    Rat e_x;       // closed form, hypersurface side
    Rat e_dual;    // closed form, mirror side
    Rat aggregate; // the l-dependent correction term
    bool x_integral = false;
    bool dual_integral = false;
    bool x_denominator_divides_b = false;
    bool dual_denominator_divides_a = false;
    bool mirror_pass = false; // e_x == (-1)^(d-1) e_dual
};

inline WPSReport wps_report(const WPSParams& p) {
    p.validate();
    WPSReport r;
    r.params = p;
    r.dim = p.dim();
    r.e_x = wps_estr_closed(p);
    r.e_dual = wps_estr_closed_dual(p);
    r.aggregate = wps_aggregate(p);
    r.x_integral = is_integer(r.e_x);
    r.dual_integral = is_integer(r.e_dual);
    r.x_denominator_divides_b = is_integer(r.e_x * p.b);
    r.dual_denominator_divides_a = is_integer(r.e_dual * p.a);
    Rat flip = (r.dim % 2) ? r.e_dual : Rat(-r.e_dual);
    r.mirror_pass = r.e_x == flip;
    return r;
}

// Materialization bound, overridable through the environment.
inline size_t max_materialize_dim() {
    if (const char* env = std::getenv("STRINGY_MAX_DIM")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return size_t(v);
    }
    return kDefaultMaxDim;
}

} // namespace stringy
