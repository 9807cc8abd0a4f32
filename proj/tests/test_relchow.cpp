#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "perdet/relchow.hpp"
#include "perdet/rng.hpp"

#include <cmath>

using namespace perdet;

namespace {

RatFunc T() { return RatFunc::T(); }

RatFunc random_split(Rng& rng, int max_deg = 4) {
    Poly p = Poly::constant(rng.rational());
    int deg = rng.range(1, max_deg);
    for (int i = 0; i < deg; ++i) p = p * Poly::linear_root(rng.rational(9, 5));
    return RatFunc(p);
}

}  // namespace

TEST_CASE("tame symbol examples") {
    // (t, 1-t) at 0 -> 1
    RatFunc one_minus_t(Poly{Rational(1), Rational(-1)});
    CHECK(tame_symbol(T(), one_minus_t, ClosedPoint::finite(Rational(0))) == Rational(1));
    // (t, t) at 0 -> -1
    CHECK(tame_symbol(T(), T(), ClosedPoint::finite(Rational(0))) == Rational(-1));
    // g = t^2, f = t-1 at infinity -> 1
    RatFunc t2 = T() * T();
    RatFunc tm1(Poly{Rational(-1), Rational(1)});
    CHECK(tame_symbol(t2, tm1, ClosedPoint::infinity()) == Rational(1));
}

TEST_CASE("tame symbol at an orbit point via resultant norms") {
    // q = t^2+1; (t, t^2+1) at the orbit: ord_q(g)=0, ord_q(f)=1,
    // symbol = N(t)^1 = Res(t^2+1, t) = 1
    Poly q{Rational(1), Rational(0), Rational(1)};
    RatFunc f(q);
    CHECK(tame_symbol(T(), f, ClosedPoint::orbit(q)) == Rational(1));
    // ((t^2+1), t) at 0: ord_0 f = 0 -> f(0)^{ord_0 t} -> value 1^1... check
    // consistency through reciprocity below instead.
    CHECK(weil_reciprocity_check(T(), f));
}

TEST_CASE("bilinearity and skew-symmetry of the symbol") {
    Rng rng(4);
    for (int it = 0; it < 60; ++it) {
        RatFunc g1 = random_split(rng, 3), g2 = random_split(rng, 3), f = random_split(rng, 3);
        ClosedPoint x = ClosedPoint::finite(rng.rational(6, 3));
        CHECK(tame_symbol(g1 * g2, f, x) == tame_symbol(g1, f, x) * tame_symbol(g2, f, x));
        // (g,f)(f,g) = (-1)^{ord g ord f}-consistent unit: product of the two
        // symbols equals (-1)^{ord f ord g} exactly
        auto [of, lf] = ord_and_lead(f, P1Point::finite(x.value));
        auto [og, lg] = ord_and_lead(g1, P1Point::finite(x.value));
        (void)lf;
        (void)lg;
        Rational sign = ((of * og) % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(tame_symbol(g1, f, x) * tame_symbol(f, g1, x) == sign);
    }
}

TEST_CASE("Weil reciprocity: worked example and 100 random split pairs") {
    RatFunc one_minus_t(Poly{Rational(1), Rational(-1)});
    CHECK(weil_reciprocity_check(T(), one_minus_t));
    CHECK(weil_reciprocity_check(T(), T()));
    Rng rng(42);
    for (int it = 0; it < 100; ++it) {
        RatFunc g = random_split(rng);
        RatFunc f = random_split(rng);
        CHECK(weil_reciprocity_product(g, f) == Rational(1));
    }
}

TEST_CASE("Weil reciprocity with irreducible factors") {
    Rng rng(43);
    std::vector<Poly> irr = {
        Poly{Rational(1), Rational(0), Rational(1)},     // t^2+1
        Poly{Rational(2), Rational(0), Rational(1)},     // t^2+2
        Poly{Rational(1), Rational(1), Rational(1)},     // t^2+t+1
        Poly{Rational(2), Rational(0), Rational(0), Rational(1)},  // t^3+2
    };
    for (int it = 0; it < 25; ++it) {
        RatFunc g(irr[rng.below(irr.size())] * Poly::linear_root(rng.rational(5, 3)));
        RatFunc f(irr[rng.below(irr.size())], Poly::linear_root(rng.rational(5, 3)));
        CHECK(weil_reciprocity_product(g, f) == Rational(1));
    }
}

TEST_CASE("boundary of rational functions") {
    Divisor D = Divisor::of({Rational(0)}, false);
    auto b = boundary(T(), D);
    REQUIRE(b.size() >= 1);
    CHECK(b[0].point == ClosedPoint::finite(Rational(0)));
    CHECK(b[0].ord == 1);
    CHECK(b[0].unit == Rational(1));

    // f = (t-2)/(t-3) on D = {0,1,inf}: units (2/3, 1/2, 1)
    Divisor D3 = Divisor::of({Rational(0), Rational(1)}, true);
    RatFunc f(Poly::linear_root(Rational(2)), Poly::linear_root(Rational(3)));
    auto bf = boundary(f, D3);
    REQUIRE(bf.size() == 5);  // 0, 1, inf, and the two off-D points
    CHECK(bf[0].ord == 0);
    CHECK(bf[0].unit == Rational(2, 3));
    CHECK(bf[1].ord == 0);
    CHECK(bf[1].unit == Rational(1, 2));
    CHECK(bf[2].ord == 0);
    CHECK(bf[2].unit == Rational(1));
    CHECK(bf[3].point == ClosedPoint::finite(Rational(2)));
    CHECK(bf[3].ord == 1);
    CHECK(bf[4].point == ClosedPoint::finite(Rational(3)));
    CHECK(bf[4].ord == -1);
}

TEST_CASE("chow normal form: exactness on boundaries") {
    Divisor D = Divisor::of({Rational(0), Rational(1)}, true);
    // f invertible at D with div f off D: class of the boundary is zero
    RatFunc f(Poly::linear_root(Rational(2)), Poly::linear_root(Rational(3)));
    CHECK(chow_normal_form(boundary(f, D), D).is_zero());

    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
        RatFunc g = random_split(rng);
        CHECK(chow_normal_form(boundary(g, D), D).is_zero());
    }
    // with an irreducible factor
    RatFunc h(Poly{Rational(1), Rational(0), Rational(1)});
    CHECK(chow_normal_form(boundary(h, D), D).is_zero());
}

TEST_CASE("class of a point in U has degree 1") {
    Divisor D = Divisor::of({Rational(0), Rational(1)}, true);
    std::vector<AdeleElement> cyc{{ClosedPoint::finite(Rational(2)), 1, Rational(1)}};
    RelChowClass c = chow_normal_form(cyc, D);
    CHECK(c.degree == 1);
    // the degree is stable under moving the point by a boundary
    std::vector<AdeleElement> cyc2{{ClosedPoint::finite(Rational(5)), 1, Rational(1)}};
    CHECK(chow_normal_form(cyc2, D).degree == 1);
    // an orbit point of degree 2 contributes 2
    std::vector<AdeleElement> cyc3{
        {ClosedPoint::orbit(Poly{Rational(1), Rational(0), Rational(1)}), 1, Rational(1)}};
    CHECK(chow_normal_form(cyc3, D).degree == 2);
}

TEST_CASE("relative canonical class for the three reference divisors") {
    // D' = {0, inf}: degree 0, units (1, -1)
    {
        Divisor D = Divisor::of({Rational(0)}, true);
        RelChowClass c = relative_canonical_class(D);
        CHECK(c.degree == 0);
        CHECK(c.units == std::vector<Rational>{Rational(1), Rational(-1)});
    }
    // D' = {0, 1, inf}: degree -1, units (1, -1, 1)
    {
        Divisor D = Divisor::of({Rational(0), Rational(1)}, true);
        RelChowClass c = relative_canonical_class(D);
        CHECK(c.degree == -1);
        CHECK(c.units == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
    }
    // D' = {0, 1, 2, inf}: degree -2, units (1, -1/2, 1, -1/2)
    {
        Divisor D = Divisor::of({Rational(0), Rational(1), Rational(2)}, true);
        RelChowClass c = relative_canonical_class(D);
        CHECK(c.degree == -2);
        CHECK(c.units == std::vector<Rational>{Rational(1), Rational(-1, 2), Rational(1),
                                               Rational(-1, 2)});
    }
    // degree = 2 - #D' on more divisors
    for (int n = 1; n <= 5; ++n) {
        std::vector<Rational> pts;
        for (int i = 0; i < n; ++i) pts.push_back(Rational(2 * i + 1, 2));
        Divisor D = Divisor::of(pts, true);
        CHECK(relative_canonical_class(D).degree == 2 - static_cast<long>(D.size()));
    }
}

TEST_CASE("analytic symbol reduces to the exact symbol for trivial exponents") {
    auto conn = LogConnection::rank1({Rational(0), Rational(1)}, {Rational(0), Rational(0)});
    PathPlan plan = default_plan(conn);
    // a = 0: value = u^0 (reg lim phi)^m with phi identically 1
    Complex v = analytic_symbol_pair(conn, plan, 0, 1, Rational(1));
    CHECK(std::abs(v - Complex(1, 0)) < 1e-12);
    Complex v2 = analytic_symbol_pair(conn, plan, 0, 0, Rational(5));
    CHECK(std::abs(v2 - Complex(1, 0)) < 1e-12);
}

TEST_CASE("analytic symbol: ord 0 gives u^a with the principal branch") {
    auto conn = LogConnection::rank1({Rational(0), Rational(1)},
                                     {Rational(1, 3), Rational(1, 4)});
    PathPlan plan = default_plan(conn);
    Complex v = analytic_symbol_pair(conn, plan, 0, 0, Rational(4));
    CHECK(std::abs(v - std::pow(Complex(4, 0), Complex(1.0 / 3.0, 0))) < 1e-12);
}

TEST_CASE("analytic symbol matches the regularized limit cross-module") {
    auto conn = LogConnection::rank1({Rational(0), Rational(1)},
                                     {Rational(1, 2), Rational(1, 2)});
    PathPlan plan = default_plan(conn);
    double a = 0.5;
    Complex lhs = analytic_symbol_pair(conn, plan, 0, 1, Rational(1));
    Complex rhs = std::exp(Complex(0, -M_PI * a)) /
                  regularized_symbol_by_transport(conn, plan, 0);
    CHECK(std::abs(lhs - rhs) < 1e-6 * (1.0 + std::abs(rhs)));
}

TEST_CASE("fermat configuration chern class") {
    auto c = fermat_configuration_chern(1, {Rational(1), Rational(1), Rational(-2)});
    CHECK(c.degree == 1);
    CHECK(c.units == std::vector<Rational>{Rational(1), Rational(1), Rational(-2)});
    CHECK_THROWS(fermat_configuration_chern(1, {Rational(1), Rational(1), Rational(-1)}));
    CHECK_THROWS(fermat_configuration_chern(1, {Rational(1), Rational(-1), Rational(0)}));

    auto k = fermat_relative_canonical(1, {Rational(1), Rational(1), Rational(-2)});
    CHECK(k.degree == -1);  // (-1)^n with n = 1 inverts the class

    // pairing with the Fermat rank-1 object: sum a_i = 0 in Q/Z kills units
    CHECK(fermat_pairing_is_trivial({Rational(1, 3), Rational(1, 3), Rational(1, 3)}, c));
    CHECK(!fermat_pairing_is_trivial({Rational(1, 3), Rational(1, 3), Rational(1, 4)}, c));
}

TEST_CASE("theorem 2 heuristic recognizes beta and rejects the control") {
    auto beta = LogConnection::rank1({Rational(0), Rational(1)},
                                     {Rational(1, 2), Rational(1, 2)});
    PathPlan plan = default_plan(beta);
    RatioHeuristic h = theorem2_ratio_heuristic(beta, plan);
    REQUIRE(h.rational_guess.has_value());

    auto third = LogConnection::rank1({Rational(0), Rational(1)},
                                      {Rational(1, 3), Rational(1, 3)});
    RatioHeuristic h3 = theorem2_ratio_heuristic(third, default_plan(third));
    REQUIRE(h3.rational_guess.has_value());

    // perturbed gamma factor: no recognition
    Complex perturbed = h.ratio * 1.0001;
    bool rec = std::abs(perturbed.imag()) < 1e-9 &&
               recognize_rational(perturbed.real(), 10000L, 1e-9).has_value();
    CHECK(!rec);
}
