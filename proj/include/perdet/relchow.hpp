#pragma once

#include "perdet/pathplan.hpp"
#include "perdet/periods.hpp"
#include "perdet/ratfunc.hpp"

#include <map>
#include <optional>
#include <vector>

namespace perdet {

// Closed point of P^1 over Q: a rational point, infinity, or a monic
// irreducible (or at least squarefree, pairwise-coprime within a
// computation) polynomial of degree > 1 standing for its Galois orbit.
// Norm computations through resultants are exact for squarefree factors
// even without full irreducibility, because the resultant multiplies over
// the true points of the orbit.
struct ClosedPoint {
    enum class Kind { finite, infinity, orbit };
    Kind kind = Kind::finite;
    Rational value;  // finite
    Poly min_poly;   // orbit: monic, degree > 1
    long degree() const { return kind == Kind::orbit ? min_poly.degree() : 1; }

    static ClosedPoint finite(Rational v) { return {Kind::finite, std::move(v), Poly()}; }
    static ClosedPoint infinity() { return {Kind::infinity, Rational(0), Poly()}; }
    static ClosedPoint orbit(Poly p) { return {Kind::orbit, Rational(0), std::move(p)}; }
    bool operator==(const ClosedPoint& o) const {
        if (kind != o.kind) return false;
        if (kind == Kind::finite) return value == o.value;
        if (kind == Kind::orbit) return min_poly == o.min_poly;
        return true;
    }
    bool operator<(const ClosedPoint& o) const;
    std::string str() const;
};

// Component of an adele at a closed point: the pair (ord, unit) relative to
// the default uniformizer (t - x at finite points, 1/t at infinity). Away
// from the divisor the unit slot is absent (A_x = Z there); the unit is
// norm-reduced to Q^x at orbit points.
struct AdeleElement {
    ClosedPoint point;
    long ord = 0;
    Rational unit = Rational(1);
};

// D' on P^1: sorted finite rational points, optionally followed by infinity.
struct Divisor {
    std::vector<Rational> finite;  // sorted ascending
    bool with_infinity = true;
    size_t size() const { return finite.size() + (with_infinity ? 1 : 0); }
    static Divisor of(std::vector<Rational> pts, bool inf);
    bool contains(const ClosedPoint& x) const;
};

// Normal form of a class in CH^1(P^1 mod D):
//   degree: total degree of the cycle (the Z-quotient invariant);
//   units: one value in Q^x per D-point (sorted, infinity last), scaled so
//   the first unit is 1. Complete invariant for the curve case.
struct RelChowClass {
    long degree = 0;
    std::vector<Rational> units;
    Divisor D;
    bool operator==(const RelChowClass& o) const {
        return degree == o.degree && units == o.units;
    }
    bool is_zero() const;
};

// Exact tame symbol (g, f)_x = (-1)^{ord g ord f} g^{ord f} f^{-ord g}(x),
// norm-reduced to Q^x at orbit points.
Rational tame_symbol(const RatFunc& g, const RatFunc& f, const ClosedPoint& x);

// All closed points where either function has a zero or pole (plus infinity),
// with the orbit factors refined to a common gcd-free basis.
std::vector<ClosedPoint> joint_support(const RatFunc& g, const RatFunc& f);

// prod over P^1 of norm-reduced symbols; exact.
bool weil_reciprocity_check(const RatFunc& g, const RatFunc& f);
Rational weil_reciprocity_product(const RatFunc& g, const RatFunc& f);

// Boundary of f as an adele: (ord_x f, leading unit) at D-points, order-only
// elsewhere on the support of div f.
std::vector<AdeleElement> boundary(const RatFunc& f, const Divisor& D);

// Canonical reduction to the normal form (deterministic pivoting: clear
// off-D support with monic generators, zero all Z-slots except the last
// D-point, scale the first unit to 1).
RelChowClass chow_normal_form(std::vector<AdeleElement> cycle, const Divisor& D);

// c_{P^1 mod D'} = -( sum_{x in D} (t - x)[x] + (-t)[infinity] ), in normal form.
RelChowClass relative_canonical_class(const Divisor& D);
// The raw adele cycle of the same formula (before reduction).
std::vector<AdeleElement> relative_canonical_cycle(const Divisor& D);

// Analytic rank-1 symbol at plan point i against the adele component
// (ord m, unit u):  exp(a_i(-m i pi + Log u)) * [reg lim (t-lam)^{a} F(t)]^m
// = e^{-i pi a m} u^{a} (P, x-lambda_i)^{-m}.
Complex analytic_symbol_pair(const LogConnection& conn, const PathPlan& plan, size_t i, long ord,
                             const Rational& unit);

// Fermat configuration on P^n mod coordinate hyperplanes (Lemma 5.5 shape):
// class of c_n(Omega^1(log D), res) at x = (t_0 : ... : t_{n+1}),
// sum t_i = 0, all t_i != 0: degree 1 with unit tuple (t_i), presented in
// F^x -> (+) F^x -> CH^n -> Z -> 0 (units modulo a common scalar, first
// unit scaled to 1). The relative canonical class is (-1)^n times it.
struct FermatChowClass {
    long n = 1;
    long degree = 1;
    std::vector<Rational> units;  // length n+2, first scaled to 1
    bool canonical_sign = false;  // true when multiplied by (-1)^n
};
FermatChowClass fermat_configuration_chern(long n, const std::vector<Rational>& coords);
FermatChowClass fermat_relative_canonical(long n, const std::vector<Rational>& coords);

// Symbolic pairing of the rank-1 Fermat object with exponents a_i against
// the class above: returns true when the unit contribution dies because
// sum a_i = 0 in Q/Z (the pairing is then 1 in the class group).
bool fermat_pairing_is_trivial(const std::vector<Rational>& exponents,
                               const FermatChowClass& cls);

// Theorem 2 rationality heuristic (labeled heuristic):
// ratio = [detHc(M) Gamma(M)] [detHc(1) Gamma(1)]^{-1} (pairing value)^{-1};
// recognized as rational with denominator <= 10^4 when Theorem 2 holds.
struct RatioHeuristic {
    Complex ratio{0.0, 0.0};
    std::optional<Rational> rational_guess;
};
RatioHeuristic theorem2_ratio_heuristic(const LogConnection& conn, const PathPlan& plan,
                                        double tol = 1e-9);

}  // namespace perdet
