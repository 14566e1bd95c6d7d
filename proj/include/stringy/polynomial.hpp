#pragma once

#include "stringy/arith.hpp"

namespace stringy {

// Dense polynomial in one variable over Q; coefficient i belongs to u^i.
class UPoly {
public:
    UPoly() = default;
    UPoly(std::initializer_list<Rat> cs) : c_(cs) { trim(); }
    explicit UPoly(Rat constant) : c_{std::move(constant)} { trim(); }
    explicit UPoly(const Int& constant) : c_{Rat(constant)} { trim(); }

    static UPoly monomial(const Rat& coeff, size_t deg) {
        UPoly p;
        if (coeff == 0) return p;
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = coeff;
        return p;
    }

    static UPoly one_minus_power(size_t e) { // 1 - u^e
        UPoly p;
        p.c_.assign(e + 1, Rat(0));
        p.c_[0] = 1;
        p.c_[e] -= 1;
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return c_; }
    Rat coefficient(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& x) const {
        Rat v = 0;
        for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (Rat& x : r.c_) x = -x;
        return r;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c_.assign(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UPoly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend UPoly operator*(const Rat& s, const UPoly& a) {
        UPoly r = a;
        for (Rat& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // Division with remainder: *this = q * d + r.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw InternalCheck("polynomial division by zero");
        UPoly q, r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            size_t k = size_t(r.degree() - d.degree());
            Rat f = r.leading() / d.leading();
            UPoly t = monomial(f, k);
            q = q + t;
            r = r - t * d;
        }
        return {q, r};
    }

    UPoly divexact(const UPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw InternalCheck("inexact polynomial division");
        return q;
    }

    UPoly pow(size_t e) const {
        UPoly r{Rat(1)};
        for (size_t i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // u^n * p(1/u), for n >= degree.
    UPoly reversed(size_t n) const {
        if (int(n) < degree()) throw InternalCheck("reversal order below degree");
        UPoly r;
        r.c_.assign(n + 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
        r.trim();
        return r;
    }

    // Scale to an integer polynomial with content 1 and positive leading coefficient;
    // returns the rational factor s with *this = s * primitive_part.
    UPoly primitive_part(Rat* factor = nullptr) const {
        if (is_zero()) {
            if (factor) *factor = 0;
            return {};
        }
        Int den = 1;
        for (const Rat& x : c_) den = lcm(den, x.get_den());
        Int g = 0;
        for (const Rat& x : c_) {
            Rat v = x * den;
            g = gcd(g, v.get_num());
        }
        Rat s(g, den);
        s.canonicalize();
        if (sgn(leading()) < 0) s = -s;
        UPoly p = (1 / s) * *this;
        if (factor) *factor = s;
        return p;
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

private:
    std::vector<Rat> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.primitive_part();
    }
    if (a.is_zero()) return a;
    return a;
}

// Reduced fraction of polynomials over Q. Canonical form: gcd(num, den) = 1 and
// the denominator is an integer polynomial with content 1 and positive leading
// coefficient.
class RationalFunctionUQ {
public:
    RationalFunctionUQ() : num_{}, den_{Rat(1)} {}
    RationalFunctionUQ(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit RationalFunctionUQ(UPoly num) : num_(std::move(num)), den_{Rat(1)} {}
    explicit RationalFunctionUQ(const Rat& c) : num_{UPoly(c)}, den_{Rat(1)} {}

    const UPoly& numerator() const { return num_; }
    const UPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    UPoly as_polynomial() const {
        if (!is_polynomial()) throw InternalCheck("rational function is not a polynomial");
        return Rat(1) / den_.coefficient(0) * num_;
    }

    friend RationalFunctionUQ operator+(const RationalFunctionUQ& a, const RationalFunctionUQ& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunctionUQ operator-(const RationalFunctionUQ& a, const RationalFunctionUQ& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunctionUQ operator*(const RationalFunctionUQ& a, const RationalFunctionUQ& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunctionUQ operator/(const RationalFunctionUQ& a, const RationalFunctionUQ& b) {
        if (b.is_zero()) throw InternalCheck("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunctionUQ operator-() const {
        RationalFunctionUQ r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const RationalFunctionUQ& a, const RationalFunctionUQ& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rat evaluate(const Rat& x) const {
        Rat d = den_(x);
        if (d == 0) throw PoleEvaluation("denominator vanishes at " + to_string(x));
        return num_(x) / d;
    }

    // Coefficients 0..order of the power series at u = 0.
    std::vector<Rat> series_expand(size_t order) const {
        if (den_.coefficient(0) == 0)
            throw PoleEvaluation("series expansion requires a nonzero denominator at 0");
        std::vector<Rat> out(order + 1, Rat(0));
        Rat d0 = den_.coefficient(0);
        for (size_t i = 0; i <= order; ++i) {
            Rat acc = num_.coefficient(i);
            for (size_t j = 1; j <= i; ++j) acc -= den_.coefficient(j) * out[i - j];
            out[i] = acc / d0;
        }
        return out;
    }

    // f(1/u) as a rational function.
    RationalFunctionUQ substitute_reciprocal() const {
        size_t n = size_t(std::max(num_.degree(), den_.degree()));
        if (num_.is_zero()) return RationalFunctionUQ{};
        return {num_.reversed(n), den_.reversed(n)};
    }

private:
    void reduce() {
        if (den_.is_zero()) throw InternalCheck("zero denominator");
        if (num_.is_zero()) {
            den_ = UPoly{Rat(1)};
            return;
        }
        UPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        Rat s;
        UPoly dp = den_.primitive_part(&s);
        den_ = std::move(dp);
        num_ = (1 / s) * num_;
    }

    UPoly num_;
    UPoly den_;
};

} // namespace stringy
