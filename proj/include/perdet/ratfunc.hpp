#pragma once

#include "perdet/poly.hpp"

#include <stdexcept>
#include <variant>

namespace perdet {

// A point of P^1(Q): a rational number or infinity.
struct P1Point {
    bool at_infinity = false;
    Rational value;  // meaningful when !at_infinity
    static P1Point infinity() { return P1Point{true, Rational(0)}; }
    static P1Point finite(Rational v) { return P1Point{false, std::move(v)}; }
    bool operator==(const P1Point& o) const {
        return at_infinity == o.at_infinity && (at_infinity || value == o.value);
    }
};

// Element of Q(T) in normal form: den monic, gcd(num, den) = 1; zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
    RatFunc(Poly num, Poly den) { normalize(std::move(num), std::move(den)); }
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(Rational(1))) {}
    static RatFunc constant(const Rational& a) { return RatFunc(Poly::constant(a)); }
    static RatFunc T() { return RatFunc(Poly{Rational(0), Rational(1)}); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFunc& o) const {
        // cross-multiplication equality; normal form makes it literal
        return num_ == o.num_ && den_ == o.den_;
    }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    RatFunc inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return RatFunc(den_, num_);
    }

    // f(T + s)
    RatFunc shift(const Rational& s) const { return RatFunc(num_.shift(s), den_.shift(s)); }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("pole at evaluation point");
        return num_.eval(x) / d;
    }

    std::string str(const std::string& var = "T") const {
        if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    void normalize(Poly num, Poly den) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly::constant(Rational(1));
            return;
        }
        Poly g = gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        Rational lc = den.leading();
        num_ = (Rational(1) / lc) * num;
        den_ = (Rational(1) / lc) * den;
    }
    Poly num_, den_;
};

inline RatFunc rf_normalize(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

// Order of vanishing of a nonzero poly at finite x, with the cofactor value:
// p = (T-x)^ord * u, returns (ord, u(x)).
inline std::pair<long, Rational> poly_ord_lead(const Poly& p, const Rational& x) {
    assert(!p.is_zero());
    Poly q = p;
    Poly lin = Poly::linear_root(x);
    long ord = 0;
    while (q.eval(x) == 0) {
        q = q / lin;
        ++ord;
    }
    return {ord, q.eval(x)};
}

// Order and leading Laurent coefficient of f at a point of P^1:
// f = lead * (T-x)^ord * (1 + O(T-x)); at infinity in S = 1/T,
// f = lead * S^ord * (1 + O(S)).
inline std::pair<long, Rational> ord_and_lead(const RatFunc& f, const P1Point& x) {
    if (f.is_zero()) throw std::domain_error("ord_and_lead of zero");
    if (x.at_infinity) {
        long ord = f.den().degree() - f.num().degree();
        // reversed() evaluates the top coefficients: lead = lc(num)/lc(den)
        Rational lead = f.num().leading() / f.den().leading();
        return {ord, lead};
    }
    auto [on, ln] = poly_ord_lead(f.num(), x.value);
    auto [od, ld] = poly_ord_lead(f.den(), x.value);
    return {on - od, ln / ld};
}

}  // namespace perdet
