#pragma once

#include "perdet/rational.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

namespace perdet {

// Univariate polynomial over Q, coefficients lowest degree first.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (empty coefficient vector).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }
    Poly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
    static Poly monomial(const Rational& a, size_t k) {
        std::vector<Rational> cs(k + 1);
        cs[k] = a;
        return Poly(std::move(cs));
    }
    // T - alpha
    static Poly linear_root(const Rational& alpha) { return Poly{-alpha, Rational(1)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const {
        assert(!c_.empty());
        return c_.back();
    }
    Rational constant_term() const { return c_.empty() ? Rational(0) : c_[0]; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Rational& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    Complex eval(Complex x) const {
        Complex acc(0.0, 0.0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Complex(to_double(*it), 0.0);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return Poly(std::move(d));
    }

    // p(T + s)
    Poly shift(const Rational& s) const {
        Poly result;
        Poly base = Poly::constant(Rational(1));
        Poly lin{s, Rational(1)};  // T + s
        for (size_t i = 0; i < c_.size(); ++i) {
            result = result + c_[i] * base;
            base = base * lin;
        }
        return result;
    }

    // p(q(T))
    Poly compose(const Poly& q) const {
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly::constant(*it);
        return acc;
    }

    // Reverse coefficients: T^deg * p(1/T).
    Poly reversed() const {
        std::vector<Rational> r(c_.rbegin(), c_.rend());
        return Poly(std::move(r));
    }

    Poly monic() const {
        assert(!is_zero());
        return (Rational(1) / leading()) * (*this);
    }

    // Division with remainder: *this = q*d + r, deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        assert(!d.is_zero());
        Poly r = *this;
        std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            size_t k = static_cast<size_t>(r.degree() - d.degree());
            Rational f = r.leading() / d.leading();
            q[k] = f;
            // r -= f * T^k * d
            for (size_t i = 0; i < d.c_.size(); ++i) r.c_[k + i] -= f * d.c_[i];
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.is_zero() ? a : a.monic();
    }

    std::string str(const std::string& var = "T") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational a = coeff(static_cast<size_t>(i));
        if (a == 0) continue;
        if (!out.empty()) out += (a > 0 ? " + " : " - ");
        else if (a < 0) out += "-";
        Rational mag = abs(a);
        bool unit = (mag == 1 && i > 0);
        if (!unit) out += to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Yun's square-free decomposition: p = prod f_i^i with f_i square-free,
// pairwise coprime. Returns the list (f_1, f_2, ...), monic.
inline std::vector<Poly> squarefree_decomposition(const Poly& p) {
    assert(!p.is_zero());
    std::vector<Poly> out;
    if (p.degree() == 0) return out;
    Poly a = p.monic();
    Poly g = gcd(a, a.derivative());
    if (g.degree() == 0) {
        out.push_back(a);
        return out;
    }
    Poly w = a / g;
    while (w.degree() > 0) {
        Poly y = gcd(w, g);
        out.push_back((w / y).monic());
        w = y;
        g = g / y;
    }
    return out;
}

// Resultant via Sylvester matrix with exact fraction-free (Bareiss) elimination.
Rational resultant(const Poly& f, const Poly& g);

inline Rational resultant(const Poly& f, const Poly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0 && n == 0) return Rational(1);
    if (m == 0) {
        Rational r(1);
        for (int i = 0; i < n; ++i) r *= f.leading();
        return r;
    }
    if (n == 0) {
        Rational r(1);
        for (int i = 0; i < m; ++i) r *= g.leading();
        return r;
    }
    size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<Rational>> S(N, std::vector<Rational>(N, Rational(0)));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) S[static_cast<size_t>(row)][static_cast<size_t>(row + i)] = f.coeff(static_cast<size_t>(m - i));
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) S[static_cast<size_t>(n + row)][static_cast<size_t>(row + i)] = g.coeff(static_cast<size_t>(n - i));
    // plain Gaussian elimination over Q with partial pivot by nonzero
    Rational det(1);
    for (size_t col = 0; col < N; ++col) {
        size_t piv = col;
        while (piv < N && S[piv][col] == 0) ++piv;
        if (piv == N) return Rational(0);
        if (piv != col) {
            std::swap(S[piv], S[col]);
            det = -det;
        }
        det *= S[col][col];
        for (size_t r2 = col + 1; r2 < N; ++r2) {
            if (S[r2][col] == 0) continue;
            Rational f2 = S[r2][col] / S[col][col];
            for (size_t c2 = col; c2 < N; ++c2) S[r2][c2] -= f2 * S[col][c2];
        }
    }
    return det;
}

}  // namespace perdet
