#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perdet/gamma.hpp"
#include "perdet/rng.hpp"

#include <cmath>

using namespace perdet;

namespace {
double rel_err(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(b)); }
}  // namespace

TEST_CASE("gamma_complex basics") {
    CHECK(rel_err(gamma_complex(Complex(1, 0)).value, Complex(1, 0)) < 1e-13);
    CHECK(rel_err(gamma_complex(Complex(0.5, 0)).value, Complex(std::sqrt(M_PI), 0)) < 1e-13);
    CHECK(rel_err(gamma_complex(Complex(5, 0)).value, Complex(24, 0)) < 1e-13);
    CHECK(gamma_complex(Complex(0, 0)).condition == GammaCondition::near_pole);
    CHECK(gamma_complex(Complex(-3, 1e-10)).condition == GammaCondition::near_pole);
    CHECK(gamma_complex(Complex(400, 0)).condition == GammaCondition::overflow);
}

TEST_CASE("functional equation on a grid") {
    for (double re = -9.7; re <= 10.0; re += 1.37) {
        for (double im = -9.5; im <= 10.0; im += 1.61) {
            Complex z(re, im);
            if (std::abs(z) > 10.0) continue;
            auto gz = gamma_complex(z);
            auto gz1 = gamma_complex(z + 1.0);
            if (gz.condition != GammaCondition::ok || gz1.condition != GammaCondition::ok)
                continue;
            CHECK(std::abs(gz1.value / (z * gz.value) - 1.0) < 1e-11);
        }
    }
}

TEST_CASE("reflection formula away from integers") {
    for (double re = -4.3; re <= 4.3; re += 0.83) {
        for (double im = -3.3; im <= 3.3; im += 0.97) {
            Complex z(re, im);
            if (std::abs(z - std::round(re)) < 0.1 && std::abs(im) < 0.1) continue;
            auto a = gamma_complex(z);
            auto b = gamma_complex(1.0 - z);
            if (a.condition != GammaCondition::ok || b.condition != GammaCondition::ok) continue;
            Complex lhs = a.value * b.value * std::sin(M_PI * z) / M_PI;
            CHECK(std::abs(lhs - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("partial_shift") {
    RatFunc T = RatFunc::T();
    RatFunc s = partial_shift(T);
    CHECK(s == RatFunc(Poly{Rational(0), Rational(1)}, Poly{Rational(-1), Rational(1)}));
    CHECK(partial_shift(RatFunc::constant(Rational(7))) == RatFunc::constant(Rational(1)));
    RatFunc T2 = T * T;
    RatFunc s2 = partial_shift(T2);
    CHECK(s2 == RatFunc(Poly{Rational(0), Rational(0), Rational(1)},
                        Poly{Rational(1), Rational(-2), Rational(1)}));
}

TEST_CASE("delta") {
    CHECK(delta(RatFunc(Poly::linear_root(Rational(2, 3)))) == Rational(2, 3));
    CHECK(delta(RatFunc::T()) == Rational(1));
    CHECK(delta(RatFunc::constant(Rational(3))) == Rational(1));
    // multiplicativity
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        RatFunc f(Poly::linear_root(rng.rational()) * Poly::linear_root(rng.rational()),
                  Poly::linear_root(rng.rational()));
        RatFunc g(Poly::linear_root(rng.rational()),
                  Poly::linear_root(rng.rational()) * Poly::constant(rng.rational()));
        CHECK(delta(f * g) == delta(f) * delta(g));
    }
}

TEST_CASE("gamma_of_rf on the paper's generators") {
    // T - 1/2 -> Gamma(1/2)
    auto g = gamma_of_rf(RatFunc(Poly::linear_root(Rational(1, 2))));
    CHECK(rel_err(g.value, Complex(1.7724538509055159, 0)) < 1e-12);
    // T + 3 -> (-1)^3/3! = -1/6
    auto g2 = gamma_of_rf(RatFunc(Poly::linear_root(Rational(-3))));
    CHECK(rel_err(g2.value, Complex(-1.0 / 6.0, 0)) < 1e-13);
    // 7(T-2) -> Gamma(2) = 1 (constants contribute 1)
    auto g3 = gamma_of_rf(RatFunc(Rational(7) * Poly::linear_root(Rational(2))));
    CHECK(rel_err(g3.value, Complex(1, 0)) < 1e-13);
    // nilpotent: char poly T^2, rule at n = 0 gives 1
    QMatrix n(2, 2);
    n(0, 1) = Rational(1);
    CHECK(rel_err(gamma_of_matrix(n).value, Complex(1, 0)) < 1e-13);
}

TEST_CASE("gamma_of_matrix") {
    QMatrix m(1, 1);
    m(0, 0) = Rational(1, 2);
    CHECK(rel_err(gamma_of_matrix(m).value, Complex(std::sqrt(M_PI), 0)) < 1e-12);
    // diag(1/3, 2/3): Gamma(1/3)Gamma(2/3) = pi/sin(pi/3) = 2 pi / sqrt(3)
    QMatrix d(2, 2);
    d(0, 0) = Rational(1, 3);
    d(1, 1) = Rational(2, 3);
    CHECK(rel_err(gamma_of_matrix(d).value, Complex(2.0 * M_PI / std::sqrt(3.0), 0)) < 1e-12);
}

TEST_CASE("Gamma(df) Delta(f) = 1 for 100 random split f") {
    Rng rng(314);
    int done = 0;
    while (done < 100) {
        Poly num = Poly::constant(rng.rational());
        Poly den = Poly::constant(Rational(1));
        // roots pairwise non-congruent mod Z, away from Z_{<=0}
        std::vector<Rational> roots;
        int nf = rng.range(1, 3), nd = rng.range(0, 2);
        bool ok = true;
        auto add_root = [&](bool to_num) {
            Rational r(rng.range(1, 30), rng.range(2, 7));
            for (const auto& s : roots)
                if (is_integer(r - s)) ok = false;
            roots.push_back(r);
            if (to_num) num = num * Poly::linear_root(r);
            else den = den * Poly::linear_root(r);
        };
        for (int i = 0; i < nf; ++i) add_root(true);
        for (int i = 0; i < nd; ++i) add_root(false);
        if (!ok) continue;
        RatFunc f(num, den);
        auto g = gamma_of_rf(partial_shift(f));
        REQUIRE(g.condition == GammaCondition::ok);
        Complex prod = g.value * Complex(to_double(delta(f)), 0.0);
        CHECK(std::abs(prod - 1.0) < 1e-10);
        ++done;
    }
}

TEST_CASE("Gauss multiplication identity for m in {2,3,5}") {
    Rng rng(2718);
    for (long m : {2L, 3L, 5L}) {
        for (int it = 0; it < 50; ++it) {
            Complex s(0.3 + 4.0 * rng.uniform(), -2.0 + 4.0 * rng.uniform());
            Complex rhs(1.0, 0.0);
            for (long l = 0; l < m; ++l) {
                rhs *= gamma_complex((s + static_cast<double>(l)) / static_cast<double>(m)).value;
                rhs /= gamma_complex(Complex((1.0 + l) / static_cast<double>(m), 0.0)).value;
            }
            rhs *= std::pow(Complex(static_cast<double>(m), 0.0), s - 1.0);
            CHECK(std::abs(gamma_complex(s).value / rhs - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("gamma_of_rf is multiplicative on disjoint root sets") {
    Rng rng(99);
    for (int it = 0; it < 40; ++it) {
        RatFunc f(Poly::linear_root(Rational(rng.range(1, 20), 7)),
                  Poly::linear_root(Rational(rng.range(1, 20), 11)));
        RatFunc g(Poly::linear_root(Rational(rng.range(1, 20), 13)),
                  Poly::linear_root(Rational(rng.range(1, 20), 17)));
        auto gf = gamma_of_rf(f), gg = gamma_of_rf(g), gfg = gamma_of_rf(f * g);
        if (gf.condition != GammaCondition::ok || gg.condition != GammaCondition::ok ||
            gfg.condition != GammaCondition::ok)
            continue;
        CHECK(std::abs(gfg.value / (gf.value * gg.value) - 1.0) < 1e-10);
    }
}
