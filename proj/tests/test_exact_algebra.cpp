#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perdet/gf.hpp"
#include "perdet/qmatrix.hpp"
#include "perdet/ratfunc.hpp"
#include "perdet/rng.hpp"
#include "perdet/roots.hpp"

#include <cmath>
#include <set>

using namespace perdet;

TEST_CASE("rational parsing and normal form") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("rf_normalize") {
    // (2T^2-2, 2T-2) -> (T+1, 1)
    RatFunc f(Poly{Rational(-2), Rational(0), Rational(2)}, Poly{Rational(-2), Rational(2)});
    CHECK(f.num() == Poly{Rational(1), Rational(1)});
    CHECK(f.den() == Poly::constant(Rational(1)));

    // (0, T) -> 0
    RatFunc z(Poly(), Poly{Rational(0), Rational(1)});
    CHECK(z.is_zero());
    CHECK(z.den() == Poly::constant(Rational(1)));

    // (3T, 6) -> num (1/2)T, den 1 (monic denominator convention)
    RatFunc g(Poly{Rational(0), Rational(3)}, Poly::constant(Rational(6)));
    CHECK(g.num() == Poly{Rational(0), Rational(1, 2)});
    CHECK(g.den() == Poly::constant(Rational(1)));

    CHECK_THROWS_AS(RatFunc(Poly::constant(Rational(1)), Poly()), std::domain_error);
}

TEST_CASE("ord_and_lead at points and infinity") {
    // f = T^2/(T-1) at 0: expansion -T^2 (1 + T + ...) -> (2, -1)
    RatFunc f(Poly{Rational(0), Rational(0), Rational(1)}, Poly{Rational(-1), Rational(1)});
    auto [o, l] = ord_and_lead(f, P1Point::finite(Rational(0)));
    CHECK(o == 2);
    CHECK(l == Rational(-1));

    auto [oi, li] = ord_and_lead(RatFunc::T(), P1Point::infinity());
    CHECK(oi == -1);
    CHECK(li == Rational(1));

    auto [oc, lc] = ord_and_lead(RatFunc::constant(Rational(5)), P1Point::finite(Rational(3)));
    CHECK(oc == 0);
    CHECK(lc == Rational(5));

    CHECK_THROWS_AS(ord_and_lead(RatFunc(), P1Point::infinity()), std::domain_error);
}

TEST_CASE("ord_and_lead is a valuation (200 random pairs)") {
    Rng rng(1234);
    for (int it = 0; it < 200; ++it) {
        auto mk = [&]() {
            Poly num = Poly::constant(rng.rational());
            Poly den = Poly::constant(Rational(1));
            for (int i = 0, n = rng.range(1, 3); i < n; ++i)
                num = num * Poly::linear_root(rng.rational(6, 4));
            for (int i = 0, n = rng.range(0, 2); i < n; ++i)
                den = den * Poly::linear_root(rng.rational(6, 4));
            return RatFunc(num, den);
        };
        RatFunc f = mk(), g = mk();
        P1Point x = (rng.below(4) == 0) ? P1Point::infinity()
                                        : P1Point::finite(rng.rational(6, 4));
        auto [of, lf] = ord_and_lead(f, x);
        auto [og, lg] = ord_and_lead(g, x);
        auto [ofg, lfg] = ord_and_lead(f * g, x);
        CHECK(ofg == of + og);
        CHECK(lfg == lf * lg);
    }
}

TEST_CASE("degree formula: sum of ord * deg over P^1 is zero for split f") {
    Rng rng(99);
    for (int it = 0; it < 100; ++it) {
        Poly num = Poly::constant(rng.rational());
        Poly den = Poly::constant(Rational(1));
        std::set<Rational> support;
        for (int i = 0, n = rng.range(1, 4); i < n; ++i) {
            Rational r = rng.rational(8, 3);
            num = num * Poly::linear_root(r);
            support.insert(r);
        }
        for (int i = 0, n = rng.range(0, 3); i < n; ++i) {
            Rational r = rng.rational(8, 3);
            den = den * Poly::linear_root(r);
            support.insert(r);
        }
        RatFunc f(num, den);
        long total = 0;
        for (const auto& x : support) total += ord_and_lead(f, P1Point::finite(x)).first;
        total += ord_and_lead(f, P1Point::infinity()).first;
        CHECK(total == 0);
    }
}

TEST_CASE("char_poly") {
    QMatrix z(1, 1);
    CHECK(char_poly(z) == Poly{Rational(0), Rational(1)});  // T

    QMatrix m = QMatrix::from_rows({{Rational(1), Rational(1)}, {Rational(0), Rational(2)}});
    CHECK(char_poly(m) == Poly{Rational(2), Rational(-3), Rational(1)});  // T^2-3T+2

    CHECK(char_poly(QMatrix::identity(3)) ==
          Poly::linear_root(Rational(1)) * Poly::linear_root(Rational(1)) *
              Poly::linear_root(Rational(1)));

    QMatrix rect(2, 3);
    CHECK_THROWS(char_poly(rect));
}

TEST_CASE("char_poly vanishes exactly on rational eigenvalues of triangular matrices") {
    Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        size_t n = 2 + rng.below(2);
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) m(i, j) = rng.rational();
        Poly phi = char_poly(m);
        for (size_t i = 0; i < n; ++i) CHECK(phi.eval(m(i, i)) == Rational(0));
    }
}

TEST_CASE("complex_roots") {
    // T^2 + 1 -> i, -i
    Poly p{Rational(1), Rational(0), Rational(1)};
    auto roots = complex_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(std::abs(roots[0].value - Complex(0, -1)) < 1e-12);
    CHECK(std::abs(roots[1].value - Complex(0, 1)) < 1e-12);

    // (T - 1/2)^2 (T + 3): multiplicities via exact extraction
    Poly q = Poly::linear_root(Rational(1, 2)) * Poly::linear_root(Rational(1, 2)) *
             Poly::linear_root(Rational(-3));
    auto r2 = complex_roots(q);
    int found_half = 0, found_m3 = 0;
    for (const auto& r : r2) {
        if (r.exact_rational && r.rational_value == Rational(1, 2)) found_half = r.multiplicity;
        if (r.exact_rational && r.rational_value == Rational(-3)) found_m3 = r.multiplicity;
    }
    CHECK(found_half == 2);
    CHECK(found_m3 == 1);

    // Wilkinson-style prod (T - k/4), k=1..8
    Poly w = Poly::constant(Rational(1));
    for (int k = 1; k <= 8; ++k) w = w * Poly::linear_root(Rational(k, 4));
    auto rw = complex_roots(w);
    REQUIRE(rw.size() == 8);
    std::multiset<Rational> vals;
    for (const auto& r : rw) {
        REQUIRE(r.exact_rational);
        vals.insert(r.rational_value);
    }
    for (int k = 1; k <= 8; ++k) CHECK(vals.count(Rational(k, 4)) == 1);
}

TEST_CASE("complex_roots reproduce coefficients via Vieta") {
    Rng rng(2024);
    for (int it = 0; it < 20; ++it) {
        Poly p = Poly::constant(Rational(1));
        int deg = rng.range(2, 5);
        for (int i = 0; i < deg; ++i) p = p * Poly::linear_root(rng.rational(5, 3));
        auto roots = complex_roots(p);
        Complex sum(0, 0), prod(1, 0);
        int total = 0;
        for (const auto& r : roots) {
            for (int i = 0; i < r.multiplicity; ++i) {
                sum += r.value;
                prod *= r.value;
            }
            total += r.multiplicity;
        }
        REQUIRE(total == deg);
        double tol = 1e-11;
        Complex coeff_sum(-to_double(p.coeff(static_cast<size_t>(deg - 1))), 0.0);
        double sgn = (deg % 2 == 0) ? 1.0 : -1.0;
        Complex coeff_prod(sgn * to_double(p.coeff(0)), 0.0);
        CHECK(std::abs(sum - coeff_sum) < tol * (1.0 + std::abs(coeff_sum)));
        CHECK(std::abs(prod - coeff_prod) < tol * (1.0 + std::abs(coeff_prod)));
    }
}

TEST_CASE("resultant") {
    // res(T^2+1, T-2) = 5 (value of T^2+1 at 2)
    Poly a{Rational(1), Rational(0), Rational(1)};
    Poly b{Rational(-2), Rational(1)};
    CHECK(resultant(b, a) == Rational(5));
    // multiplicativity
    Poly c{Rational(1), Rational(1)};
    CHECK(resultant(b, a * c) == resultant(b, a) * resultant(b, c));
}

TEST_CASE("GF(7,1) with generator 3") {
    GF f(7, 1, {0, 1}, 3);
    CHECK(f.order() == 7);
    CHECK(f.dlog(2) == 2);  // 3^2 = 2 mod 7
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.trace(4) == 4);
    CHECK_THROWS(GF(7, 1, {0, 1}, 2));  // 2 has order 3, not a generator
}

TEST_CASE("GF(5,2) modulus T^2+2") {
    GF f(5, 2, {2, 0, 1});
    CHECK(f.order() == 25);
    long nonzero_logs = 0;
    for (long a = 1; a < 25; ++a) {
        f.dlog(static_cast<GF::Elem>(a));
        ++nonzero_logs;
    }
    CHECK(nonzero_logs == 24);
    // trace(1) = e mod p = 2
    CHECK(f.trace(f.one()) == 2);
    // trace is F_p-linear and surjective
    std::set<long> image;
    for (long a = 0; a < 25; ++a) image.insert(f.trace(static_cast<GF::Elem>(a)));
    CHECK(image.size() == 5);
    CHECK_THROWS(GF(5, 2, {1, 0, 1}));  // T^2+1 = (T+2)(T+3) mod 5 is reducible
}

TEST_CASE("GF generator order and Frobenius") {
    for (auto [p, e] : std::vector<std::pair<long, int>>{{2, 4}, {3, 3}, {7, 2}, {13, 1}}) {
        GF f(p, e);
        // generator order exactly q-1: dlog covers all of [0, q-1)
        std::set<long> logs;
        for (long a = 1; a < f.order(); ++a) logs.insert(f.dlog(static_cast<GF::Elem>(a)));
        CHECK(logs.size() == static_cast<size_t>(f.order() - 1));
        // Frobenius x -> x^p permutes the roots of the modulus: check that
        // x = T (packed as p) satisfies modulus(x) = 0 and so does x^p
        if (e > 1) {
            GF::Elem t = static_cast<GF::Elem>(p);  // the class of T
            auto eval_modulus = [&](GF::Elem x) {
                GF::Elem acc = f.zero();
                GF::Elem pw = f.one();
                for (int i = 0; i <= e; ++i) {
                    GF::Elem term = f.mul(f.from_int(f.modulus()[static_cast<size_t>(i)]), pw);
                    acc = f.add(acc, term);
                    if (i < e) pw = f.mul(pw, x);
                }
                return acc;
            };
            CHECK(eval_modulus(t) == f.zero());
            CHECK(eval_modulus(f.pow(t, p)) == f.zero());
        }
    }
}
