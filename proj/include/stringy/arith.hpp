#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "stringy/errors.hpp"

namespace stringy {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int m;
    mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return m;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& a) { return floor_div(a.get_num(), a.get_den()); }
inline Int ceil_rat(const Rat& a) { return ceil_div(a.get_num(), a.get_den()); }

inline bool is_integer(const Rat& a) { return a.get_den() == 1; }

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dotq(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dotq(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += b[i] * a[i];
    return s;
}

inline Rat dotq(const QVec& a, const IVec& b) { return dotq(b, a); }

inline IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec subq(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec scale(const Int& c, const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline QVec scaleq(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline IVec neg(const IVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline bool is_zero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline bool is_zero(const QVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

inline QVec to_qvec(const IVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

// Requires every entry to be integral.
inline IVec to_ivec(const QVec& a) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (!is_integer(a[i])) throw NonLatticeVertices("coordinate " + a[i].get_str() + " is not an integer");
        r[i] = a[i].get_num();
    }
    return r;
}

inline bool is_integral(const QVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return is_integer(x); });
}

// Clears denominators: smallest positive multiplier making the vector integral.
inline Int common_denominator(const QVec& a) {
    Int m = 1;
    for (const Rat& x : a) m = lcm(m, x.get_den());
    return m;
}

inline IVec scale_to_int(const QVec& a) {
    Int m = common_denominator(a);
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Rat v = a[i] * m;
        r[i] = v.get_num();
    }
    return r;
}

// Divides out the gcd of the entries, keeping orientation; zero vector stays zero.
inline IVec primitive(IVec a) {
    Int g = 0;
    for (const Int& x : a) g = gcd(g, x);
    if (g > 1) {
        for (Int& x : a) x /= g;
    }
    return a;
}

inline IVec primitive_direction(const QVec& a) { return primitive(scale_to_int(a)); }

struct LexLessI {
    bool operator()(const IVec& a, const IVec& b) const {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    }
};

struct LexLessQ {
    bool operator()(const QVec& a, const QVec& b) const {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return a.size() < b.size();
    }
};

inline std::string to_string(const Rat& a) {
    return a.get_str();
}

inline std::string to_string(const IVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].get_str();
    }
    return s + ")";
}

inline std::string to_string(const QVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].get_str();
    }
    return s + ")";
}

} // namespace stringy
